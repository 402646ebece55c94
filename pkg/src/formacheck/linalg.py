"""Exact linear algebra over the rationals.

Everything here carries `fractions.Fraction` entries; no floating point is
allowed anywhere.  Pivoting and free-variable conventions are fixed so that
every downstream choice (generator sets, complements, cohomology
representatives) is reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence

Vec = tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def _coerce(x) -> Fraction:
    # floats are rejected to keep certificates exact by construction
    if isinstance(x, float):
        raise TypeError("floating point entries are not allowed")
    return Fraction(x)


def as_vec(values: Iterable) -> Vec:
    return tuple(_coerce(x) for x in values)


def zero_vec(n: int) -> Vec:
    return (ZERO,) * n


def unit_vec(n: int, i: int) -> Vec:
    return tuple(ONE if j == i else ZERO for j in range(n))


def vec_is_zero(v: Sequence[Fraction]) -> bool:
    return all(x == 0 for x in v)


@dataclass(frozen=True)
class MatQ:
    """Dense matrix over Q, row-major, immutable after construction."""

    rows: int
    cols: int
    entries: tuple[Vec, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimensions")
        if len(self.entries) != self.rows:
            raise ValueError("row count does not match entries")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix rows")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], cols: Optional[int] = None) -> "MatQ":
        data = tuple(as_vec(r) for r in rows)
        if data:
            ncols = len(data[0])
        elif cols is not None:
            ncols = cols
        else:
            raise ValueError("column count required for a matrix with no rows")
        return cls(len(data), ncols, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "MatQ":
        return cls(rows, cols, tuple(zero_vec(cols) for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "MatQ":
        return cls(n, n, tuple(unit_vec(n, i) for i in range(n)))

    def transpose(self) -> "MatQ":
        return MatQ(self.cols, self.rows,
                    tuple(tuple(self.entries[i][j] for i in range(self.rows))
                          for j in range(self.cols)))

    def matmul(self, other: "MatQ") -> "MatQ":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matmul")
        rows = []
        for i in range(self.rows):
            left = self.entries[i]
            row = [ZERO] * other.cols
            for k, c in enumerate(left):
                if c == 0:
                    continue
                right = other.entries[k]
                for j, r in enumerate(right):
                    if r != 0:
                        row[j] += c * r
            rows.append(tuple(row))
        return MatQ(self.rows, other.cols, tuple(rows))

    def matvec(self, v: Sequence) -> Vec:
        x = as_vec(v)
        if len(x) != self.cols:
            raise ValueError("dimension mismatch in matvec")
        return tuple(sum((row[j] * x[j] for j in range(self.cols)), ZERO)
                     for row in self.entries)

    def is_zero(self) -> bool:
        return all(vec_is_zero(row) for row in self.entries)


class RrefResult(NamedTuple):
    rref: MatQ
    pivot_cols: tuple[int, ...]
    rank: int


def rref(m: MatQ) -> RrefResult:
    """Reduced row echelon form with deterministic pivoting.

    The pivot for each column is the first row (in index order) with a
    nonzero entry; no magnitude-based pivoting, so identical inputs always
    produce identical output.
    """
    work = [list(row) for row in m.entries]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        pr = next((i for i in range(r, m.rows) if work[i][c] != 0), None)
        if pr is None:
            continue
        if pr != r:
            work[r], work[pr] = work[pr], work[r]
        inv = ONE / work[r][c]
        work[r] = [x * inv for x in work[r]]
        for i in range(m.rows):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    out = MatQ(m.rows, m.cols, tuple(tuple(row) for row in work))
    return RrefResult(out, tuple(pivots), r)


def kernel_basis(m: MatQ) -> list[Vec]:
    """Basis of the null space {x : m.x = 0}, one vector per free column.

    For free column f the vector has a 1 in position f and the negated
    reduced column above the pivots; vectors are ordered by free column
    index.
    """
    red, pivots, rank = rref(m)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = [ZERO] * m.cols
        v[f] = ONE
        for j, p in enumerate(pivots):
            v[p] = -red.entries[j][f]
        basis.append(tuple(v))
    assert len(basis) == m.cols - rank
    return basis


def solve(m: MatQ, b: Sequence) -> Optional[Vec]:
    """One solution of m.x = b, or None if inconsistent.

    Free variables are set to zero, so the returned solution is unique for
    a given input.
    """
    rhs = as_vec(b)
    if len(rhs) != m.rows:
        raise ValueError("right-hand side length does not match row count")
    aug = MatQ(m.rows, m.cols + 1,
               tuple(row + (rhs[i],) for i, row in enumerate(m.entries)))
    red, pivots, _ = rref(aug)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [ZERO] * m.cols
    for j, p in enumerate(pivots):
        x[p] = red.entries[j][m.cols]
    return tuple(x)


class RowSpace:
    """Mutable row span kept in reduced echelon form.

    Work structure for growing subspaces one vector at a time; the stored
    rows are a canonical (RREF) basis of everything added so far.
    """

    def __init__(self, dim: int):
        self.dim = dim
        self.rows: list[Vec] = []
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: Sequence) -> list[Fraction]:
        out = [Fraction(x) for x in v]
        for row, p in zip(self.rows, self.pivots):
            c = out[p]
            if c != 0:
                for j in range(p, self.dim):
                    out[j] -= c * row[j]
        return out

    def add(self, v: Sequence) -> Optional[Vec]:
        """Insert v's residue mod the current span.

        Returns the canonical new row (pivot normalized to 1) when v
        enlarges the span, else None.
        """
        red = self.reduce(v)
        p = next((j for j, x in enumerate(red) if x != 0), None)
        if p is None:
            return None
        inv = ONE / red[p]
        new_row = tuple(x * inv for x in red)
        for i, row in enumerate(self.rows):
            c = row[p]
            if c != 0:
                self.rows[i] = tuple(a - c * b for a, b in zip(row, new_row))
        where = next((i for i, q in enumerate(self.pivots) if q > p), len(self.pivots))
        self.rows.insert(where, new_row)
        self.pivots.insert(where, p)
        return new_row

    def contains(self, v: Sequence) -> bool:
        return vec_is_zero(self.reduce(v))


def extend_to_complement(sub: Sequence[Sequence], ambient_dim: int) -> list[Vec]:
    """Standard basis vectors completing span(sub) to the ambient space.

    Scans e_0, e_1, ... in index order and keeps each vector that enlarges
    the span; the greedy rule makes the complement choice reproducible.
    """
    rs = RowSpace(ambient_dim)
    for v in sub:
        if len(v) != ambient_dim:
            raise ValueError("subspace vector has wrong length")
        rs.add(v)
    kept = []
    for i in range(ambient_dim):
        e = unit_vec(ambient_dim, i)
        if rs.add(e) is not None:
            kept.append(e)
    return kept
