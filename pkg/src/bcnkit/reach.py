"""Controllability, set controllability and output controllability.

The one-step matrix M has M(i,a)=1 when some control moves state a to
state i; its reachability closure C (at least one step) decides plain
controllability.  Set-level questions reduce to the Boolean triple
product Jd^T * C * J0 of the closure with 0/1 indicator matrices of the
initial and destination set families.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from .boolmat import BooleanMatrix, ShapeError
from .compiler import AlgebraicForm, encode_state


@dataclass(frozen=True)
class StateSet:
    """A subset of the 1..universe state indices; sorted and deduplicated."""

    universe: int
    members: tuple[int, ...]

    def __post_init__(self):
        ms = tuple(sorted(set(self.members)))
        bad = [s for s in ms if not 1 <= s <= self.universe]
        if bad:
            raise ValueError(f"state indices {bad} outside 1..{self.universe}")
        object.__setattr__(self, "members", ms)

    def indicator_bits(self) -> int:
        acc = 0
        for s in self.members:
            acc |= 1 << (s - 1)
        return acc


@dataclass(frozen=True)
class SetFamily:
    """An ordered family of state subsets (order fixes index-matrix columns)."""

    universe: int
    sets: tuple[StateSet, ...]
    warnings: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if any(s.universe != self.universe for s in self.sets):
            raise ValueError("member sets disagree on universe size")
        dupes = []
        seen = {}
        for k, s in enumerate(self.sets, start=1):
            if s.members in seen:
                dupes.append(f"set #{k} duplicates set #{seen[s.members]}")
            else:
                seen[s.members] = k
        if dupes:
            object.__setattr__(self, "warnings", self.warnings + tuple(dupes))

    def __len__(self) -> int:
        return len(self.sets)


def one_step_matrix(form: AlgebraicForm) -> BooleanMatrix:
    """Boolean OR of the per-control column blocks of L."""
    nn = form.state_count
    bits = [0] * nn
    for j in range(1, form.control_count + 1):
        for a in range(1, nn + 1):
            bits[form.successor(j, a) - 1] |= 1 << (a - 1)
    return BooleanMatrix(nn, nn, bits)


def controllability_matrix(m: BooleanMatrix) -> BooleanMatrix:
    """Least fixpoint of C <- M + M*C starting from M.

    Equals the Boolean sum of M^(i) for i = 1..size (path lengths above
    the vertex count add nothing); entry (i,j) marks reachability of i
    from j in at least one step.
    """
    if m.rows != m.cols:
        raise ShapeError("one-step matrix must be square")
    c = m
    while True:
        nxt = m.add(m.mul(c))
        if nxt == c:
            return c
        c = nxt


@dataclass(frozen=True)
class ReachReport:
    """Verdicts read off a (set) controllability matrix."""

    matrix: BooleanMatrix

    def pair_reachable(self, i: int, j: int) -> bool:
        return self.matrix.get(i, j) == 1

    def controllable_at(self, j: int) -> bool:
        return self.matrix.column_all_ones(j)

    @property
    def globally_controllable(self) -> bool:
        return self.matrix.is_all_ones()


def index_matrix(family: SetFamily) -> BooleanMatrix:
    """Column k is the 0/1 indicator vector of the k-th set."""
    if not family.sets:
        raise ValueError("empty set family")
    bits = [0] * family.universe
    for k, s in enumerate(family.sets):
        for st in s.members:
            bits[st - 1] |= 1 << k
    return BooleanMatrix(family.universe, len(family.sets), bits)


def set_controllability_matrix(
    c: BooleanMatrix, j0: BooleanMatrix, jd: BooleanMatrix
) -> BooleanMatrix:
    """Jd^T * C * J0 over the Boolean semiring (beta x alpha)."""
    return jd.transpose().mul(c).mul(j0)


def output_partition(form: AlgebraicForm) -> SetFamily:
    """Partition of the state space by output value: set j collects the
    states whose H-column is the j-th basis vector.  Empty classes are
    retained (as empty sets) so unattained output values still count."""
    pp = 1 << form.p
    classes: list[list[int]] = [[] for _ in range(pp)]
    for a in range(1, form.state_count + 1):
        classes[form.H.column(a) - 1].append(a)
    return SetFamily(
        form.state_count,
        tuple(StateSet(form.state_count, tuple(cls)) for cls in classes),
    )


def output_controllability_matrix(c: BooleanMatrix, form: AlgebraicForm) -> BooleanMatrix:
    """H * C over the Boolean semiring; all-ones means every output value
    is reachable from every initial state."""
    if form.p == 0:
        raise ValueError("model has no outputs")
    return form.H.to_boolean().mul(c)


# -- set-specification files ------------------------------------------------


def _parse_state(item, n: int) -> int:
    if isinstance(item, bool):
        raise ValueError(f"bad state spec {item!r}")
    if isinstance(item, int):
        return item
    if isinstance(item, str):
        if set(item) - {"0", "1"} or len(item) != n:
            raise ValueError(f"bit string {item!r} does not have {n} bits")
        return encode_state([int(ch) for ch in item])
    raise ValueError(f"bad state spec {item!r}")


def _parse_family(entries, n: int) -> SetFamily:
    universe = 1 << n
    sets = []
    for ent in entries:
        if not isinstance(ent, dict) or "states" not in ent:
            raise ValueError("each set needs a 'states' list")
        members = tuple(_parse_state(s, n) for s in ent["states"])
        if not members:
            raise ValueError(f"set {ent.get('name', '?')!r} is empty")
        sets.append(StateSet(universe, members))
    if not sets:
        raise ValueError("empty set family")
    return SetFamily(universe, tuple(sets))


def load_set_spec(text: str, n: int) -> tuple[SetFamily, SetFamily]:
    """Parse the JSON set-specification format; returns (initial,
    destination) families over the 2^n state universe.  States may be
    1-based indices or bit strings like "101" (first state bit first)."""
    doc = json.loads(text)
    if not isinstance(doc, dict) or "initial" not in doc or "destination" not in doc:
        raise ValueError("set spec needs 'initial' and 'destination' lists")
    return _parse_family(doc["initial"], n), _parse_family(doc["destination"], n)
