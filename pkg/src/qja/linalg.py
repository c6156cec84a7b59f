"""Dense exact linear algebra over the rationals.

Matrices are small (at most a few hundred rows), so everything is plain
Gauss-Jordan elimination on lists of :class:`~fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class DimensionError(ValueError):
    pass


class ExactMatrix:
    """Immutable dense matrix of rationals."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Iterable], cols: int | None = None):
        grid = tuple(tuple(Fraction(x) for x in row) for row in data)
        if cols is None:
            if not grid:
                raise DimensionError("cannot infer column count of an empty matrix")
            cols = len(grid[0])
        if any(len(r) != cols for r in grid):
            raise DimensionError("ragged matrix")
        self.rows = len(grid)
        self.cols = cols
        self._data = grid

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "ExactMatrix":
        return cls([[col[i] for col in columns] for i in range(rows)], len(columns))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self._data)

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._data]

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._data[i][j]

    def __iter__(self):
        return iter(self._data)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.cols == other.cols and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.cols, self._data))

    def __repr__(self) -> str:
        return f"ExactMatrix({self.rows}x{self.cols})"

    def matvec(self, v: Sequence) -> list[Fraction]:
        if len(v) != self.cols:
            raise DimensionError(f"vector of length {len(v)} for {self.cols} columns")
        return [sum((a * b for a, b in zip(r, v) if a and b), Fraction(0)) for r in self._data]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(zip(*self._data), self.rows) if self.rows else ExactMatrix([], 0)


def rref(m: ExactMatrix) -> tuple[ExactMatrix, list[int]]:
    """Reduced row echelon form and 0-based pivot columns.

    Pivots are taken column by column from the first nonzero entry at or
    below the current pivot row.  Zero rows are kept at the bottom so the
    result has the same shape as ``m``.
    """
    a = m.tolist()
    nrows, ncols = m.rows, m.cols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        if inv != 1:
            a[r] = [x * inv for x in a[r]]
        prow = a[r]
        for i in range(nrows):
            f = a[i][c]
            if i != r and f:
                a[i] = [x - f * y if y else x for x, y in zip(a[i], prow)]
        pivots.append(c)
        r += 1
    return ExactMatrix(a, ncols), pivots


def rank(m: ExactMatrix) -> int:
    return len(rref(m)[1])


def nullity(m: ExactMatrix) -> int:
    return m.cols - rank(m)


def nullspace_canonical(m: ExactMatrix) -> list[list[Fraction]]:
    """One basis vector per free column, in increasing column order.

    The vector for free column ``f`` has 1 at ``f``, 0 at the other free
    columns and ``-R[row(p), f]`` at each pivot column ``p``.
    """
    r, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -r[i, f]
        basis.append(v)
    return basis


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^n stored as the nonzero rows of an RREF matrix."""

    ambient: int
    basis: tuple[tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence) -> bool:
        return contains(self, v)

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains(b) for b in self.basis)


def span(vectors: Iterable[Sequence], ambient: int | None = None) -> Subspace:
    vecs = [list(v) for v in vectors]
    if ambient is None:
        if not vecs:
            raise DimensionError("ambient dimension required for an empty span")
        ambient = len(vecs[0])
    if any(len(v) != ambient for v in vecs):
        raise DimensionError("vectors of different lengths")
    if not vecs:
        return Subspace(ambient, ())
    r, pivots = rref(ExactMatrix(vecs, ambient))
    return Subspace(ambient, tuple(r.row(i) for i in range(len(pivots))))


def dim(s: Subspace) -> int:
    return s.dim


def _check_ambient(s1: Subspace, s2: Subspace) -> None:
    if s1.ambient != s2.ambient:
        raise DimensionError(f"ambient dimensions differ: {s1.ambient} vs {s2.ambient}")


def contains(s: Subspace, v: Sequence) -> bool:
    if len(v) != s.ambient:
        raise DimensionError(f"vector of length {len(v)} in ambient {s.ambient}")
    # reduce v against the RREF basis; pivots are the leading entries
    w = [Fraction(x) for x in v]
    for row in s.basis:
        p = next(i for i, x in enumerate(row) if x)
        if w[p]:
            f = w[p]
            w = [x - f * y if y else x for x, y in zip(w, row)]
    return not any(w)


def subspace_sum(s1: Subspace, s2: Subspace) -> Subspace:
    _check_ambient(s1, s2)
    return span(s1.basis + s2.basis, s1.ambient)


def intersect(s1: Subspace, s2: Subspace) -> Subspace:
    """Intersection via the kernel of ``[A^T | -B^T]``."""
    _check_ambient(s1, s2)
    n = s1.ambient
    if not s1.basis or not s2.basis:
        return Subspace(n, ())
    cols = [list(b) for b in s1.basis] + [[-x for x in b] for b in s2.basis]
    system = ExactMatrix.from_columns(cols, n)
    vecs = []
    for k in nullspace_canonical(system):
        v = [Fraction(0)] * n
        for c, b in zip(k[: s1.dim], s1.basis):
            if c:
                v = [x + c * y if y else x for x, y in zip(v, b)]
        vecs.append(v)
    result = span(vecs, n)
    total = subspace_sum(s1, s2)
    if result.dim != s1.dim + s2.dim - total.dim:
        raise ArithmeticError("intersection dimension disagrees with dim A + dim B - dim(A+B)")
    return result
