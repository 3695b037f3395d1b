"""Compilation of a network model to its matrix form.

States, inputs and outputs in vector form identify 1 with the first basis
vector of dimension 2 and 0 with the second; a tuple of k bits encodes
(via the Kronecker product of the per-bit vectors) to a single index in
1..2^k, with the first bit most significant and true sorting first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .boolmat import LogicalMatrix
from .netlang import Expr, NetworkModel, eval_expr, free_vars

#: Flat compilation refuses models with more than this many state+input bits.
MAX_FLAT_VARS = 20


class SizeLimitError(ValueError):
    """The model exceeds the dense-compilation size ceiling."""


def encode_state(bits: Sequence[int]) -> int:
    """Index in 1..2^k of the basis vector encoding the bit tuple."""
    idx = 0
    for b in bits:
        if b not in (0, 1):
            raise ValueError(f"entry {b!r} is not a bit")
        idx = (idx << 1) | (1 - b)
    return idx + 1


def decode_state(index: int, k: int) -> tuple[int, ...]:
    """Inverse of :func:`encode_state`."""
    if not 1 <= index <= (1 << k):
        raise IndexError(f"index {index} outside 1..2^{k}")
    v = index - 1
    return tuple(1 - ((v >> (k - 1 - i)) & 1) for i in range(k))


def structure_matrix(e: Expr, variables: Sequence[str]) -> LogicalMatrix:
    """The 2 x 2^k logical matrix tabulating e over ordered variables.

    Column a is the first basis vector exactly when e evaluates to 1 at
    the assignment decoded from a.
    """
    unknown = free_vars(e) - set(variables)
    if unknown:
        raise ValueError(f"unbound variables {sorted(unknown)}")
    k = len(variables)
    cols = []
    for a in range(1, (1 << k) + 1):
        env = dict(zip(variables, decode_state(a, k)))
        cols.append(1 if eval_expr(e, env) else 2)
    return LogicalMatrix(2, tuple(cols))


@dataclass(frozen=True)
class AlgebraicForm:
    """x(t+1) = L u(t) x(t), y(t) = H x(t) in vector form.

    L has 2^n rows and 2^(n+m) columns; column (j-1)*2^n + a holds the
    successor of state a under control j.  H has 2^p rows and 2^n
    columns.  When the model has no outputs, H is the all-ones 1 x 2^n
    logical matrix and trivial_output is set.
    """

    n: int
    m: int
    p: int
    L: LogicalMatrix
    H: LogicalMatrix
    trivial_output: bool = False

    @property
    def state_count(self) -> int:
        return 1 << self.n

    @property
    def control_count(self) -> int:
        return 1 << self.m

    def successor(self, j: int, a: int) -> int:
        """State reached from a under control j (both 1-based indices)."""
        return self.L.column((j - 1) * self.state_count + a)


def algebraic_form(model: NetworkModel, max_vars: int = MAX_FLAT_VARS) -> AlgebraicForm:
    """Compile by exhaustive truth-table enumeration of all update and
    output functions."""
    n, m, p = model.n, model.m, model.p
    if n + m > max_vars:
        raise SizeLimitError(
            f"model has {n + m} state+input variables; flat compilation "
            f"is limited to {max_vars}"
        )
    nn = 1 << n

    l_cols = []
    for j in range(1, (1 << m) + 1):
        u_env = dict(zip(model.inputs, decode_state(j, m)))
        for a in range(1, nn + 1):
            env = dict(u_env)
            env.update(zip(model.states, decode_state(a, n)))
            nxt = tuple(eval_expr(f, env) for f in model.updates)
            l_cols.append(encode_state(nxt))
    L = LogicalMatrix(nn, tuple(l_cols))

    if p == 0:
        H = LogicalMatrix(1, (1,) * nn)
        return AlgebraicForm(n, m, 0, L, H, trivial_output=True)

    h_cols = []
    for a in range(1, nn + 1):
        env = dict(zip(model.states, decode_state(a, n)))
        y = tuple(eval_expr(h, env) for h in model.output_maps)
        h_cols.append(encode_state(y))
    H = LogicalMatrix(1 << p, tuple(h_cols))
    return AlgebraicForm(n, m, p, L, H)


def render_algebraic(form: AlgebraicForm) -> str:
    """`--emit algebraic` text: header, then L and H in canonical form."""
    return (
        f"n={form.n} m={form.m} p={form.p}\n"
        f"{form.L.to_text()}\n{form.H.to_text()}\n"
    )
