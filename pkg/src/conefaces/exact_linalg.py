"""Exact rational dense linear algebra.

Reduced row echelon form, rank, nullspace, span and membership over
arbitrary-precision rationals.  This is the kernel every dimension
computation in the library reduces to.  Pivoting picks the first nonzero
entry per column; over exact arithmetic no magnitude pivoting is needed,
and canonical RREF makes subspace equality a structural comparison.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rational import Rat, ZERO, ONE, rat


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix of rationals, stored as a tuple of row tuples."""

    rows: int
    cols: int
    entries: tuple

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [tuple(rat(x) for x in r) for r in rows]
        if rows:
            ncols = len(rows[0])
            if any(len(r) != ncols for r in rows):
                raise ValueError("rows have inconsistent lengths")
        else:
            if cols is None:
                raise ValueError("empty matrix needs an explicit column count")
            ncols = cols
        if cols is not None and rows and cols != ncols:
            raise ValueError("explicit column count disagrees with row length")
        return cls(len(rows), ncols, tuple(rows))

    @classmethod
    def identity(cls, n):
        return cls.from_rows(
            [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
        )

    @classmethod
    def zero(cls, rows, cols):
        return cls.from_rows([[ZERO] * cols for _ in range(rows)], cols=cols)

    def row(self, i):
        return self.entries[i]

    def transpose(self):
        return Matrix.from_rows(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def row_lists(self):
        return [list(r) for r in self.entries]


def _reduce_row(row, pivots):
    """Eliminate a row against normalized pivot rows (pivot entry 1)."""
    for col, prow in pivots:
        c = row[col]
        if c:
            row = [a - c * b for a, b in zip(row, prow)]
    return row


def _echelon(rows, ncols, max_rank=None):
    """Incremental elimination; returns [(pivot_col, normalized_row), ...].

    Rows already reduced against all previous pivots.  Stops early once
    max_rank pivots are found (sound whenever the caller knows an upper
    bound on the rank that the remaining rows cannot exceed).
    """
    pivots = []
    for row in rows:
        if max_rank is not None and len(pivots) >= max_rank:
            break
        row = _reduce_row(list(row), pivots)
        for col, x in enumerate(row):
            if x:
                inv = ONE / x
                row = [a * inv for a in row]
                pivots.append((col, row))
                pivots.sort(key=lambda p: p[0])
                break
    return pivots


def _back_substitute(pivots):
    """Turn echelon pivot rows into canonical RREF rows."""
    for i in range(len(pivots) - 1, -1, -1):
        col, prow = pivots[i]
        for j in range(i):
            cj, rowj = pivots[j]
            c = rowj[col]
            if c:
                pivots[j] = (cj, [a - c * b for a, b in zip(rowj, prow)])
    return [row for _, row in pivots]


def rref(m: Matrix) -> Matrix:
    """The unique reduced row echelon form of m (zero rows kept at the bottom)."""
    pivots = _echelon(m.entries, m.cols)
    reduced = _back_substitute(pivots)
    reduced += [[ZERO] * m.cols for _ in range(m.rows - len(reduced))]
    return Matrix.from_rows(reduced, cols=m.cols)


def rank(m: Matrix) -> int:
    return len(_echelon(m.entries, m.cols))


@dataclass(frozen=True)
class Subspace:
    """A linear subspace given by its canonical RREF basis (no zero rows).

    Two subspaces are equal iff their bases are literally equal, which is
    exactly why the basis is kept in RREF.
    """

    ambient_dim: int
    basis: Matrix

    def __post_init__(self):
        if self.basis.cols != self.ambient_dim:
            raise ValueError("basis width disagrees with ambient dimension")

    @property
    def dim(self) -> int:
        return self.basis.rows

    def basis_vectors(self):
        return list(self.basis.entries)


def span(vectors, ambient_dim: int, max_dim=None) -> Subspace:
    """RREF span of a collection of coefficient vectors.

    max_dim is an optional rank cap known to the caller (e.g. the dimension
    of an enclosing subspace all vectors belong to); elimination stops once
    it is reached, which does not change the resulting subspace.
    """
    vectors = list(vectors)
    for v in vectors:
        if len(v) != ambient_dim:
            raise ValueError(
                f"vector of length {len(v)} in ambient dimension {ambient_dim}"
            )
    pivots = _echelon(vectors, ambient_dim, max_rank=max_dim)
    reduced = _back_substitute(pivots)
    return Subspace(ambient_dim, Matrix.from_rows(reduced, cols=ambient_dim))


def nullspace(m: Matrix) -> Subspace:
    """Kernel of m, as a canonical RREF subspace of dimension cols - rank."""
    pivots = _echelon(m.entries, m.cols)
    reduced = _back_substitute(pivots)
    pivot_cols = [col for col, _ in pivots]
    free_cols = [c for c in range(m.cols) if c not in set(pivot_cols)]
    basis = []
    for f in free_cols:
        v = [ZERO] * m.cols
        v[f] = ONE
        for (col, row) in zip(pivot_cols, reduced):
            v[col] = -row[f]
        basis.append(v)
    return span(basis, m.cols)


def contains(s: Subspace, v) -> bool:
    """Exact membership of a coefficient vector in a subspace."""
    v = [rat(x) for x in v]
    if len(v) != s.ambient_dim:
        raise ValueError("vector length disagrees with ambient dimension")
    pivots = []
    for row in s.basis.entries:
        for col, x in enumerate(row):
            if x:
                pivots.append((col, row))
                break
    v = _reduce_row(v, pivots)
    return not any(v)


def det(m: Matrix) -> "Rat":
    """Determinant by exact Gaussian elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    rows = m.row_lists()
    result = ONE
    for col in range(n):
        piv = next((i for i in range(col, n) if rows[i][col]), None)
        if piv is None:
            return ZERO
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            result = -result
        result *= rows[col][col]
        inv = ONE / rows[col][col]
        prow = [a * inv for a in rows[col]]
        for i in range(col + 1, n):
            c = rows[i][col]
            if c:
                rows[i] = [a - c * b for a, b in zip(rows[i], prow)]
    return result


def inverse(m: Matrix) -> Matrix:
    """Exact inverse of a square matrix, via RREF of [m | I]."""
    if m.rows != m.cols:
        raise ValueError("inverse of a non-square matrix")
    n = m.rows
    augmented = [
        list(m.entries[i]) + [ONE if j == i else ZERO for j in range(n)]
        for i in range(n)
    ]
    pivots = _echelon(augmented, 2 * n)
    if len(pivots) != n or any(col >= n for col, _ in pivots):
        raise ValueError("matrix is singular")
    reduced = _back_substitute(pivots)
    return Matrix.from_rows([row[n:] for row in reduced], cols=n)


def matvec(m: Matrix, v):
    v = [rat(x) for x in v]
    if len(v) != m.cols:
        raise ValueError("vector length disagrees with matrix width")
    return [sum((a * b for a, b in zip(row, v)), ZERO) for row in m.entries]
