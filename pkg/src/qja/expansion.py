"""Expansion of nonassociative monomials through the quasi-Jordan product.

The product is used unscaled: ``xy = x ⊣ y + y ⊢ x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from qja.dialgebra import DialgebraElement, DialgebraMonomial, enumerate_dialgebra_basis
from qja.linalg import ExactMatrix
from qja.trees import Mode, MonomialBasis, Tree, enumerate_monomial_basis, format_tree, is_leaf


@lru_cache(maxsize=None)
def qj_expand(t: Tree) -> DialgebraElement:
    if is_leaf(t):
        return DialgebraElement.generator(t)
    x = qj_expand(t[0])
    y = qj_expand(t[1])
    return x.left(y) + y.right(x)


@dataclass(frozen=True)
class ExpansionMatrix:
    degree: int
    column_basis: MonomialBasis
    row_basis: tuple[DialgebraMonomial, ...]
    matrix: ExactMatrix

    @property
    def mode(self) -> Mode:
        return self.column_basis.mode

    @property
    def shape(self) -> tuple[int, int]:
        return self.matrix.shape

    def row_labels(self) -> list[str]:
        return [str(m) for m in self.row_basis]

    def col_labels(self) -> list[str]:
        return [format_tree(t) for t in self.column_basis]


def expansion_column(t: Tree, rows: dict[DialgebraMonomial, int]) -> list[int]:
    col = [0] * len(rows)
    for mono, c in qj_expand(t).terms.items():
        col[rows[mono]] = c
    return col


@lru_cache(maxsize=None)
def build_expansion_matrix(n: int, mode: Mode | str = Mode.RC) -> ExpansionMatrix:
    mode = Mode.parse(mode)
    if mode is Mode.COMM:
        raise ValueError("the quasi-Jordan product is not commutative; use raw or rc_reduced")
    basis = enumerate_monomial_basis(n, mode)
    rows = tuple(enumerate_dialgebra_basis(n))
    index = {m: i for i, m in enumerate(rows)}
    columns = [expansion_column(t, index) for t in basis]
    return ExpansionMatrix(n, basis, rows, ExactMatrix.from_columns(columns, len(rows)))
