"""Exact linear algebra over the rationals: rank, kernel basis, and RREF.

Matrices are immutable once built.  Integer matrices take the fraction-free
(Bareiss) path -- the compiled kernel when present, with automatic big-integer
fallback -- and rational matrices are scaled row-wise to integers first, which
preserves the row space.  ``rank_mod`` exposes the modular fast path: the
result is always a lower bound for the exact rank, so it can certify maximal
rank on its own but anything smaller must be confirmed exactly.

Pivot policy everywhere: first nonzero entry in column order, rows scanned
top-down.  This keeps every reduction deterministic and reproducible.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from . import _kernels

Scalar = int | Fraction


class ExactMatrix:
    """Dense matrix over Q.  Instances must be treated as frozen."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, data: list[list[Scalar]]):
        # Trusted constructor: no copies, no validation.  Use from_rows for
        # externally supplied data.
        self.rows = rows
        self.cols = cols
        self._data = data

    @classmethod
    def from_rows(cls, rows) -> "ExactMatrix":
        data = [list(r) for r in rows]
        nrows = len(data)
        ncols = len(data[0]) if data else 0
        for r in data:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            for e in r:
                if not isinstance(e, (int, Fraction)):
                    raise TypeError(f"entry {e!r} is not an int or Fraction")
        return cls(nrows, ncols, data)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls(rows, cols, [[0] * cols for _ in range(rows)])

    def entry(self, i: int, j: int) -> Scalar:
        return self._data[i][j]

    def row(self, i: int) -> tuple[Scalar, ...]:
        return tuple(self._data[i])

    def to_lists(self) -> list[list[Scalar]]:
        return [list(r) for r in self._data]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            self.cols, self.rows,
            [[self._data[i][j] for i in range(self.rows)] for j in range(self.cols)],
        )

    def matvec(self, v) -> list[Scalar]:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        return [sum(r[j] * v[j] for j in range(self.cols)) for r in self._data]

    def column(self, j: int) -> tuple[Scalar, ...]:
        return tuple(self._data[i][j] for i in range(self.rows))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and all(
            self._data[i][j] == other._data[i][j]
            for i in range(self.rows)
            for j in range(self.cols)
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(map(tuple, self._data))))

    def __repr__(self) -> str:
        return f"ExactMatrix({self.rows}x{self.cols})"


def integer_rows(M: ExactMatrix) -> list[list[int]]:
    """Rows scaled by the LCM of their denominators (row space preserved)."""
    out = []
    for r in M._data:
        denom = 1
        for e in r:
            if isinstance(e, Fraction) and e.denominator != 1:
                denom = lcm(denom, e.denominator)
        if denom == 1:
            out.append([int(e) for e in r])
        else:
            out.append([int(e * denom) for e in r])
    return out


def rank(M: ExactMatrix) -> int:
    """Exact rank over the rationals."""
    if M.rows == 0 or M.cols == 0:
        return 0
    return _kernels.rank_int_rows(integer_rows(M), M.cols)


def rank_mod(M: ExactMatrix, p: int = _kernels.WORD_PRIME) -> int:
    """Rank of M reduced modulo the prime p (lower bound for rank(M))."""
    if M.rows == 0 or M.cols == 0:
        return 0
    return _kernels.rank_mod_rows(integer_rows(M), M.cols, p)


def row_reduce(M: ExactMatrix) -> tuple[ExactMatrix, tuple[int, ...]]:
    """Reduced row echelon form and the (strictly increasing) pivot columns.

    The shape is preserved (zero rows sink to the bottom), which makes the
    reduction idempotent.
    """
    data = [[Fraction(e) for e in r] for r in M._data]
    nrows, ncols = M.rows, M.cols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = -1
        for rr in range(r, nrows):
            if data[rr][c]:
                pr = rr
                break
        if pr < 0:
            continue
        if pr != r:
            data[r], data[pr] = data[pr], data[r]
        inv = 1 / data[r][c]
        data[r] = [e * inv for e in data[r]]
        prow = data[r]
        for rr in range(nrows):
            if rr != r and data[rr][c]:
                f = data[rr][c]
                row = data[rr]
                for cc in range(c, ncols):
                    row[cc] -= f * prow[cc]
        pivots.append(c)
        r += 1
    echelon = [_simplify_row(row) for row in data]
    return ExactMatrix(nrows, ncols, echelon), tuple(pivots)


def _simplify_row(row: list[Fraction]) -> list:
    return [int(e) if e.denominator == 1 else e for e in row]


def kernel_basis(M: ExactMatrix) -> ExactMatrix:
    """Right-kernel basis; columns of the result satisfy M @ col = 0.

    Column count equals cols - rank; columns are built from the free columns
    of the RREF in increasing order, so the basis is deterministic.
    """
    R, pivots = row_reduce(M)
    pivot_set = set(pivots)
    free = [c for c in range(M.cols) if c not in pivot_set]
    cols = []
    for f in free:
        v: list[Scalar] = [0] * M.cols
        v[f] = 1
        for r, pc in enumerate(pivots):
            e = R.entry(r, f)
            if e:
                v[pc] = -e
        cols.append(v)
    data = [[cols[j][i] for j in range(len(free))] for i in range(M.cols)]
    return ExactMatrix(M.cols, len(free), data)
