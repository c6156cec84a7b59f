"""Polynomial identities of the quasi-Jordan product in free associative dialgebras."""

from qja.dialgebra import DialgebraElement, DialgebraMonomial
from qja.expansion import build_expansion_matrix, qj_expand
from qja.identities import IdentityElement, verify_identity
from qja.linalg import ExactMatrix, nullspace_canonical, rank, rref
from qja.trees import Mode, enumerate_monomial_basis, format_tree, parse_tree

__all__ = [
    "DialgebraElement",
    "DialgebraMonomial",
    "ExactMatrix",
    "IdentityElement",
    "Mode",
    "build_expansion_matrix",
    "enumerate_monomial_basis",
    "format_tree",
    "nullspace_canonical",
    "parse_tree",
    "qj_expand",
    "rank",
    "rref",
    "verify_identity",
]
