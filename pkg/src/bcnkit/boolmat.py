"""Matrix algebra over the Boolean semiring ({0,1}, OR, AND).

Two representations:

* ``BooleanMatrix`` -- dense, with each row bit-packed into a Python int.
* ``LogicalMatrix`` -- a matrix whose every column is a canonical basis
  vector, stored as an array of 1-based column indices (the compact
  ``delta_m[i1,...,ir]`` form).

All indices in the public API are 1-based.  Values are immutable; every
operation returns a fresh matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Iterable, Sequence


class ShapeError(ValueError):
    """Operand shapes are incompatible for the requested operation."""


class BooleanMatrix:
    """A rows x cols bit matrix.

    Row i (1-based) is stored as an int whose bit (j-1) holds entry (i, j).
    """

    __slots__ = ("rows", "cols", "_bits")

    def __init__(self, rows: int, cols: int, row_bits: Iterable[int]):
        if rows < 1 or cols < 1:
            raise ShapeError("matrix dimensions must be positive")
        bits = tuple(row_bits)
        if len(bits) != rows:
            raise ShapeError(f"expected {rows} rows, got {len(bits)}")
        mask = (1 << cols) - 1
        if any(b & ~mask for b in bits):
            raise ShapeError("row bits exceed declared column count")
        self.rows = rows
        self.cols = cols
        self._bits = bits

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rows(cls, entries: Sequence[Sequence[int]]) -> "BooleanMatrix":
        rows = len(entries)
        if rows == 0:
            raise ShapeError("matrix dimensions must be positive")
        cols = len(entries[0])
        if any(len(r) != cols for r in entries):
            raise ShapeError("ragged rows")
        bits = []
        for r in entries:
            acc = 0
            for j, v in enumerate(r):
                if v not in (0, 1):
                    raise ValueError(f"entry {v!r} is not a bit")
                acc |= v << j
            bits.append(acc)
        return cls(rows, cols, bits)

    @classmethod
    def identity(cls, n: int) -> "BooleanMatrix":
        return cls(n, n, (1 << i for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BooleanMatrix":
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def ones(cls, rows: int, cols: int) -> "BooleanMatrix":
        full = (1 << cols) - 1
        return cls(rows, cols, (full,) * rows)

    @classmethod
    def basis_column(cls, n: int, i: int) -> "BooleanMatrix":
        """The column vector delta_n^i."""
        if not 1 <= i <= n:
            raise IndexError(f"basis index {i} out of 1..{n}")
        return cls(n, 1, (1 if k == i - 1 else 0 for k in range(n)))

    # -- element access -----------------------------------------------

    def get(self, i: int, j: int) -> int:
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise IndexError(f"({i},{j}) outside {self.rows}x{self.cols}")
        return (self._bits[i - 1] >> (j - 1)) & 1

    def row_bits(self, i: int) -> int:
        return self._bits[i - 1]

    def column_support(self, j: int) -> tuple[int, ...]:
        """1-based row indices of the 1-entries in column j."""
        if not 1 <= j <= self.cols:
            raise IndexError(f"column {j} outside 1..{self.cols}")
        m = 1 << (j - 1)
        return tuple(i + 1 for i in range(self.rows) if self._bits[i] & m)

    def is_all_ones(self) -> bool:
        full = (1 << self.cols) - 1
        return all(b == full for b in self._bits)

    def column_all_ones(self, j: int) -> bool:
        m = 1 << (j - 1)
        return all(b & m for b in self._bits)

    # -- comparisons ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BooleanMatrix):
            return NotImplemented
        return (self.rows, self.cols, self._bits) == (other.rows, other.cols, other._bits)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._bits))

    def __le__(self, other: "BooleanMatrix") -> bool:
        """Entrywise <= for same-shaped matrices."""
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError("shape mismatch in entrywise comparison")
        return all(a & ~b == 0 for a, b in zip(self._bits, other._bits))

    def __repr__(self) -> str:
        body = "; ".join(
            "".join(str((b >> j) & 1) for j in range(self.cols)) for b in self._bits
        )
        return f"BooleanMatrix({self.rows}x{self.cols}: {body})"

    # -- algebra --------------------------------------------------------

    def add(self, other: "BooleanMatrix") -> "BooleanMatrix":
        """Boolean sum: elementwise OR.  Shapes must match."""
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError(
                f"cannot add {self.rows}x{self.cols} and {other.rows}x{other.cols}"
            )
        return BooleanMatrix(
            self.rows, self.cols, (a | b for a, b in zip(self._bits, other._bits))
        )

    def mul(self, other: "BooleanMatrix") -> "BooleanMatrix":
        """Conventional matrix product with AND for *, OR for +."""
        if self.cols != other.rows:
            raise ShapeError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        out = []
        for a in self._bits:
            acc = 0
            rest = a
            while rest:
                j = (rest & -rest).bit_length() - 1
                acc |= other._bits[j]
                rest &= rest - 1
            out.append(acc)
        return BooleanMatrix(self.rows, other.cols, out)

    def kron(self, other: "BooleanMatrix") -> "BooleanMatrix":
        """Kronecker product over the Boolean semiring."""
        out = []
        for a in self._bits:
            for b in other._bits:
                acc = 0
                rest = a
                while rest:
                    j = (rest & -rest).bit_length() - 1
                    acc |= b << (j * other.cols)
                    rest &= rest - 1
                out.append(acc)
        return BooleanMatrix(self.rows * other.rows, self.cols * other.cols, out)

    def stp(self, other: "BooleanMatrix") -> "BooleanMatrix":
        """Semi-tensor product: Kronecker-pad both operands to the lcm of
        the inner dimensions, then multiply conventionally."""
        t = lcm(self.cols, other.rows)
        left = self if t == self.cols else self.kron(BooleanMatrix.identity(t // self.cols))
        right = other if t == other.rows else other.kron(BooleanMatrix.identity(t // other.rows))
        return left.mul(right)

    def power(self, k: int) -> "BooleanMatrix":
        """k-fold Boolean product of a square matrix with itself, k >= 1.

        Deliberately iterated (not squared) so it matches the defining
        expansion literally; callers needing speed compute closures instead.
        """
        if self.rows != self.cols:
            raise ShapeError("power of a non-square matrix")
        if k < 1:
            raise ValueError("exponent must be >= 1")
        acc = self
        for _ in range(k - 1):
            acc = acc.mul(self)
        return acc

    def transpose(self) -> "BooleanMatrix":
        out = []
        for j in range(self.cols):
            m = 1 << j
            acc = 0
            for i in range(self.rows):
                if self._bits[i] & m:
                    acc |= 1 << i
            out.append(acc)
        return BooleanMatrix(self.cols, self.rows, out)

    # -- serialization ---------------------------------------------------

    def to_text(self) -> str:
        """Canonical form: '<rows> <cols>' header, then one 0/1 line per row."""
        lines = [f"{self.rows} {self.cols}"]
        for b in self._bits:
            lines.append("".join(str((b >> j) & 1) for j in range(self.cols)))
        return "\n".join(lines)

    @classmethod
    def from_text(cls, text: str) -> "BooleanMatrix":
        lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
        if not lines:
            raise ValueError("empty matrix text")
        try:
            rows, cols = map(int, lines[0].split())
        except ValueError as exc:
            raise ValueError(f"bad matrix header {lines[0]!r}") from exc
        if len(lines) != rows + 1:
            raise ValueError(f"expected {rows} row lines, got {len(lines) - 1}")
        bits = []
        for ln in lines[1:]:
            if len(ln) != cols or set(ln) - {"0", "1"}:
                raise ValueError(f"bad row line {ln!r}")
            bits.append(sum(1 << j for j, ch in enumerate(ln) if ch == "1"))
        return cls(rows, cols, bits)


@dataclass(frozen=True)
class LogicalMatrix:
    """delta_rows[c1, ..., cr]: column k is the basis vector with a single 1
    in row col_index[k]."""

    rows: int
    col_index: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 1:
            raise ShapeError("row count must be positive")
        if not self.col_index:
            raise ShapeError("a logical matrix needs at least one column")
        bad = [c for c in self.col_index if not 1 <= c <= self.rows]
        if bad:
            raise ValueError(f"column indices {bad} outside 1..{self.rows}")
        object.__setattr__(self, "col_index", tuple(self.col_index))

    @property
    def cols(self) -> int:
        return len(self.col_index)

    @classmethod
    def identity(cls, n: int) -> "LogicalMatrix":
        return cls(n, tuple(range(1, n + 1)))

    def column(self, k: int) -> int:
        if not 1 <= k <= self.cols:
            raise IndexError(f"column {k} outside 1..{self.cols}")
        return self.col_index[k - 1]

    def to_boolean(self) -> BooleanMatrix:
        bits = [0] * self.rows
        for k, c in enumerate(self.col_index):
            bits[c - 1] |= 1 << k
        return BooleanMatrix(self.rows, self.cols, bits)

    @classmethod
    def from_boolean(cls, mat: BooleanMatrix) -> "LogicalMatrix":
        """Read back a logical matrix; raises if some column is not a basis
        vector."""
        idx = []
        for j in range(1, mat.cols + 1):
            support = mat.column_support(j)
            if len(support) != 1:
                raise ValueError(f"column {j} is not a basis vector")
            idx.append(support[0])
        return cls(mat.rows, tuple(idx))

    def compose(self, other: "LogicalMatrix") -> "LogicalMatrix":
        """Conventional Boolean product of logical matrices, computed as
        index composition: column k of the result is self's column picked
        by other's column k."""
        if self.cols != other.rows:
            raise ShapeError(
                f"cannot compose {self.rows}x{self.cols} with {other.rows}x{other.cols}"
            )
        return LogicalMatrix(self.rows, tuple(self.col_index[c - 1] for c in other.col_index))

    def to_text(self) -> str:
        """Canonical form: 'delta <rows> [c1 c2 ... cr]'."""
        return f"delta {self.rows} [{' '.join(map(str, self.col_index))}]"

    @classmethod
    def from_text(cls, text: str) -> "LogicalMatrix":
        s = text.strip()
        if not s.startswith("delta "):
            raise ValueError(f"not a logical-matrix literal: {s!r}")
        head, _, body = s[6:].partition("[")
        if not body.endswith("]"):
            raise ValueError("missing closing bracket")
        rows = int(head.strip())
        idx = tuple(int(tok) for tok in body[:-1].split())
        return cls(rows, idx)

    def __repr__(self) -> str:
        return f"LogicalMatrix(delta_{self.rows}{list(self.col_index)})"
