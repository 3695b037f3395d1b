"""Observability decided through pair-space reachability.

Two copies of the network are driven by one shared control sequence; the
joint state (z, x) is a single index in 1..2^(2n).  Pairs split into the
diagonal D, the same-output off-diagonal class Theta, and the
differing-output class Xi.  The network is observable exactly when from
every Theta pair some control sequence reaches Xi; a shortest such
sequence is a distinguishing witness.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .boolmat import BooleanMatrix
from .compiler import AlgebraicForm
from .reach import SetFamily, StateSet, controllability_matrix, index_matrix, set_controllability_matrix

#: Index-map construction refuses pair spaces beyond 2^26 entries.
MAX_PAIR_BITS = 26


class SizeLimitError(ValueError):
    pass


def pair_index(z: int, x: int, n: int) -> int:
    """Index of the joint state (z, x) in 1..2^(2n): (z-1)*2^n + x."""
    nn = 1 << n
    if not (1 <= z <= nn and 1 <= x <= nn):
        raise IndexError(f"pair ({z},{x}) outside 1..{nn}")
    return (z - 1) * nn + x


def pair_unindex(w: int, n: int) -> tuple[int, int]:
    nn = 1 << n
    if not 1 <= w <= nn * nn:
        raise IndexError(f"pair index {w} outside 1..{nn * nn}")
    return (w - 1) // nn + 1, (w - 1) % nn + 1


@dataclass(frozen=True)
class PairPartition:
    """D / Theta / Xi split of the 2^(2n) joint indices.

    theta holds only the z < x representatives, in ascending pair-index
    order; theta_ordered and xi hold both orientations.
    """

    n: int
    diagonal: frozenset[int]
    theta: tuple[tuple[int, int], ...]
    theta_ordered: frozenset[int]
    xi: frozenset[int]

    @property
    def theta_indices(self) -> tuple[int, ...]:
        return tuple(pair_index(z, x, self.n) for z, x in self.theta)


def partition_pairs(form: AlgebraicForm) -> PairPartition:
    n = form.n
    nn = form.state_count
    diag = []
    theta = []
    theta_all = []
    xi = []
    for z in range(1, nn + 1):
        hz = form.H.column(z)
        for x in range(1, nn + 1):
            w = pair_index(z, x, n)
            if z == x:
                diag.append(w)
            elif hz == form.H.column(x):
                theta_all.append(w)
                if z < x:
                    theta.append((z, x))
            else:
                xi.append(w)
    return PairPartition(
        n=n,
        diagonal=frozenset(diag),
        theta=tuple(theta),
        theta_ordered=frozenset(theta_all),
        xi=frozenset(xi),
    )


@dataclass(frozen=True)
class ExtendedSystem:
    """Per-control successor maps on the pair space, kept as index arrays
    (never dense 2^(2n) x 2^(2n) bits).  per_control[j-1][w-1] is the
    1-based pair reached from pair w under control j."""

    n: int
    m: int
    per_control: tuple[tuple[int, ...], ...]

    def successors(self, w: int) -> tuple[int, ...]:
        return tuple(mp[w - 1] for mp in self.per_control)


def extended_system(form: AlgebraicForm) -> ExtendedSystem:
    """Pair each column block of L with itself: control j sends (z, x) to
    (L_j z, L_j x), enumerated directly."""
    if 2 * form.n > MAX_PAIR_BITS:
        raise SizeLimitError(
            f"pair space needs 2^{2 * form.n} entries; limit is 2^{MAX_PAIR_BITS}"
        )
    n = form.n
    nn = form.state_count
    maps = []
    for j in range(1, form.control_count + 1):
        succ = [form.successor(j, a) for a in range(1, nn + 1)]
        mp = []
        for z in range(1, nn + 1):
            base = (succ[z - 1] - 1) * nn
            for x in range(1, nn + 1):
                mp.append(base + succ[x - 1])
        maps.append(tuple(mp))
    return ExtendedSystem(n, form.m, tuple(maps))


def observability_setup(part: PairPartition) -> tuple[SetFamily, SetFamily]:
    """Initial family: one singleton per Theta representative, in
    representative order.  Destination family: the single set Xi (both
    orientations)."""
    universe = 1 << (2 * part.n)
    p0 = SetFamily(
        universe,
        tuple(StateSet(universe, (w,)) for w in part.theta_indices),
    )
    pd = SetFamily(universe, (StateSet(universe, tuple(sorted(part.xi))),))
    return p0, pd


@dataclass(frozen=True)
class ObservabilityReport:
    observable: bool
    theta: tuple[tuple[int, int], ...]
    flags: tuple[bool, ...]  # distinguishable, per theta representative
    witnesses: tuple[tuple[tuple[int, ...], int] | None, ...]  # (controls, T)


def _reaches_xi(ext: ExtendedSystem, start: int, xi: frozenset[int]) -> bool:
    """True when some control sequence of length >= 1 drives the pair
    `start` into Xi."""
    seen = {start}
    queue = deque((start,))
    while queue:
        w = queue.popleft()
        for nxt in ext.successors(w):
            if nxt in xi:
                return True
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return False


def _shortest_witness(
    ext: ExtendedSystem, start: int, xi: frozenset[int]
) -> tuple[tuple[int, ...], int] | None:
    """Breadth-first search with parent pointers; controls are tried in
    ascending index order, so the returned shortest sequence is
    deterministic."""
    if start in xi:
        return (), 0
    parent: dict[int, tuple[int, int]] = {}  # node -> (pred, control)
    seen = {start}
    queue = deque((start,))
    while queue:
        w = queue.popleft()
        for j, nxt in enumerate(ext.successors(w), start=1):
            if nxt in seen:
                continue
            seen.add(nxt)
            parent[nxt] = (w, j)
            if nxt in xi:
                controls = []
                node = nxt
                while node != start:
                    node, ctrl = parent[node]
                    controls.append(ctrl)
                controls.reverse()
                return tuple(controls), len(controls)
            queue.append(nxt)
    return None


def observability_verdict(form: AlgebraicForm, want_witnesses: bool = False) -> ObservabilityReport:
    """Per-Theta-representative reachability of Xi over the pair graph.

    T >= 1 suffices for the flags since Theta and Xi are disjoint.
    """
    if form.p == 0 or form.trivial_output:
        raise ValueError("observability needs at least one output")
    part = partition_pairs(form)
    ext = extended_system(form)
    flags = []
    wits: list[tuple[tuple[int, ...], int] | None] = []
    for z, x in part.theta:
        w0 = pair_index(z, x, form.n)
        if want_witnesses:
            wit = _shortest_witness(ext, w0, part.xi)
            wits.append(wit)
            flags.append(wit is not None)
        else:
            flags.append(_reaches_xi(ext, w0, part.xi))
            wits.append(None)
    return ObservabilityReport(
        observable=all(flags),
        theta=part.theta,
        flags=tuple(flags),
        witnesses=tuple(wits),
    )


def distinguishing_witness(
    form: AlgebraicForm, z0: int, x0: int
) -> tuple[tuple[int, ...], int] | None:
    """Shortest control sequence whose joint trajectory from (z0, x0)
    lands in Xi, or None if unreachable.  A pair already in Xi yields the
    empty sequence with T = 0."""
    if z0 == x0:
        raise ValueError("witness requires two distinct initial states")
    part = partition_pairs(form)
    ext = extended_system(form)
    return _shortest_witness(ext, pair_index(z0, x0, form.n), part.xi)


def dense_verdict_row(form: AlgebraicForm) -> BooleanMatrix:
    """Cross-check engine: the 1 x |Theta| set-controllability row
    Jd^T * C_ext * J0 computed with dense closure on the pair space.
    Only viable for small pair spaces (2n <= 12)."""
    if 2 * form.n > 12:
        raise SizeLimitError("dense pair-space closure is limited to 2n <= 12")
    part = partition_pairs(form)
    ext = extended_system(form)
    size = 1 << (2 * form.n)
    bits = [0] * size
    for mp in ext.per_control:
        for w, nxt in enumerate(mp, start=1):
            bits[nxt - 1] |= 1 << (w - 1)
    m_ext = BooleanMatrix(size, size, bits)
    c_ext = controllability_matrix(m_ext)
    p0, pd = observability_setup(part)
    return set_controllability_matrix(c_ext, index_matrix(p0), index_matrix(pd))


def render_report(report: ObservabilityReport, cs_row: BooleanMatrix | None = None) -> str:
    """One line per Theta representative, then the global verdict."""
    lines = []
    for (z, x), flag, wit in zip(report.theta, report.flags, report.witnesses):
        line = f"{{{z},{x}}} -> " + ("distinguishable" if flag else "indistinguishable")
        if flag and wit is not None:
            controls, t = wit
            line += f" [witness: u=({','.join(map(str, controls))}),T={t}]"
        lines.append(line)
    lines.append("verdict: " + ("observable" if report.observable else "not observable"))
    if cs_row is not None:
        lines.append(cs_row.to_text())
    return "\n".join(lines)
