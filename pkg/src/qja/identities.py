"""Polynomial identities as linear combinations of nonassociative monomials.

An :class:`IdentityElement` keeps every monomial in the canonical form of its
mode, so two identities are equal exactly when they agree modulo the mode's
congruence (nothing, right commutativity, or full commutativity).
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from qja.dialgebra import DialgebraElement, format_terms, split_terms, var_index
from qja.expansion import qj_expand
from qja.linalg import Subspace, span
from qja.trees import (
    Mode,
    MonomialBasis,
    Tree,
    canonicalize,
    degree,
    format_tree,
    leaf_word,
    parse_tree,
    relabel,
    sort_key,
)


class IdentityElement:
    __slots__ = ("mode", "_terms", "_degree")

    def __init__(self, terms: Mapping[Tree, object] | Iterable[tuple[Tree, object]] = (),
                 mode: Mode | str = Mode.RC, degree_: int | None = None):
        self.mode = Mode.parse(mode)
        acc: dict[Tree, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for t, c in items:
            c = Fraction(c)
            if not c:
                continue
            t = canonicalize(t, self.mode)
            acc[t] = acc.get(t, Fraction(0)) + c
        self._terms = {t: c for t, c in acc.items() if c}
        degrees = {degree(t) for t in self._terms}
        if len(degrees) > 1:
            raise ValueError(f"identity is not homogeneous in degree: {sorted(degrees)}")
        self._degree = degrees.pop() if degrees else degree_

    # -- construction -------------------------------------------------------------

    @classmethod
    def parse(cls, text: str, mode: Mode | str = Mode.RC) -> "IdentityElement":
        return cls(((parse_tree(m), c) for c, m in split_terms(text)), mode)

    @classmethod
    def monomial(cls, t: Tree, mode: Mode | str = Mode.RC, coeff=1) -> "IdentityElement":
        return cls({t: coeff}, mode)

    @classmethod
    def from_vector(cls, vector: Sequence, basis: MonomialBasis) -> "IdentityElement":
        if len(vector) != len(basis):
            raise ValueError("vector length does not match basis")
        return cls(zip(basis.monomials, vector), basis.mode, basis.degree)

    # -- access -------------------------------------------------------------------

    @property
    def degree(self) -> int | None:
        return self._degree

    @property
    def terms(self) -> dict[Tree, Fraction]:
        return dict(self._terms)

    def items(self) -> list[tuple[Tree, Fraction]]:
        return sorted(self._terms.items(), key=lambda tc: sort_key(tc[0]))

    def coeff(self, t: Tree) -> Fraction:
        return self._terms.get(canonicalize(t, self.mode), Fraction(0))

    def variables(self) -> set[int]:
        return {v for t in self._terms for v in leaf_word(t)}

    def is_multilinear(self) -> bool:
        return all(len(set(leaf_word(t))) == len(leaf_word(t)) for t in self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # -- arithmetic ---------------------------------------------------------------

    def _same_mode(self, other: "IdentityElement") -> None:
        if self.mode is not other.mode:
            raise ValueError(f"mixing modes {self.mode.value} and {other.mode.value}")

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IdentityElement):
            return self.mode is other.mode and self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.mode, frozenset(self._terms.items())))

    def __add__(self, other: "IdentityElement") -> "IdentityElement":
        self._same_mode(other)
        return IdentityElement(itertools.chain(self._terms.items(), other._terms.items()), self.mode)

    def __neg__(self) -> "IdentityElement":
        return self.scale(-1)

    def __sub__(self, other: "IdentityElement") -> "IdentityElement":
        return self + (-other)

    def scale(self, c) -> "IdentityElement":
        c = Fraction(c)
        return IdentityElement({t: c * v for t, v in self._terms.items()}, self.mode, self._degree)

    def __rmul__(self, c) -> "IdentityElement":
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def in_mode(self, mode: Mode | str) -> "IdentityElement":
        return IdentityElement(self._terms.items(), mode, self._degree)

    def times(self, t: Tree) -> "IdentityElement":
        """Multiply every monomial on the right by ``t``."""
        return IdentityElement((((m, t), c) for m, c in self._terms.items()), self.mode)

    def rtimes(self, t: Tree) -> "IdentityElement":
        """Multiply every monomial on the left by ``t``."""
        return IdentityElement((((t, m), c) for m, c in self._terms.items()), self.mode)

    def scalar_multiple_of(self, other: "IdentityElement") -> Fraction | None:
        """``s`` with ``self == s * other``, or ``None``."""
        self._same_mode(other)
        if not other:
            return Fraction(1) if not self else None
        t0, c0 = other.items()[0]
        s = self.coeff(t0) / c0
        return s if self == other.scale(s) else None

    # -- coordinates and text -----------------------------------------------------

    def to_vector(self, basis: MonomialBasis) -> list[Fraction]:
        if basis.mode is not self.mode:
            return self.in_mode(basis.mode).to_vector(basis)
        v = [Fraction(0)] * len(basis)
        for t, c in self._terms.items():
            try:
                v[basis.index[t]] = c
            except KeyError:
                raise ValueError(f"monomial {format_tree(t)} not in the degree-{basis.degree} basis") from None
        return v

    def __str__(self) -> str:
        return format_terms((format_tree(t), c) for t, c in self.items())

    def __repr__(self) -> str:
        return f"IdentityElement({str(self)!r}, mode={self.mode.value!r})"

    def to_json(self) -> dict:
        return {
            "mode": self.mode.value,
            "degree": self.degree,
            "terms": [{"coeff": str(c), "monomial": format_tree(t)} for t, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "IdentityElement":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            ((parse_tree(term["monomial"]), Fraction(term["coeff"])) for term in data["terms"]),
            data["mode"],
            data.get("degree"),
        )


def _tree(x: Tree | str) -> Tree:
    return parse_tree(x) if isinstance(x, str) else x


def associator(x: Tree | str, y: Tree | str, z: Tree | str, mode: Mode | str = Mode.RAW) -> IdentityElement:
    """``(xy)z - x(yz)``."""
    x, y, z = _tree(x), _tree(y), _tree(z)
    return IdentityElement([(((x, y), z), 1), ((x, (y, z)), -1)], mode)


def expand(identity: IdentityElement) -> DialgebraElement:
    if identity.mode is Mode.COMM:
        raise ValueError("commutative-mode identities have no quasi-Jordan expansion")
    out = DialgebraElement()
    for t, c in identity.terms.items():
        out = out + qj_expand(t).scale(c)
    return out


def verify_identity(identity: IdentityElement) -> tuple[bool, DialgebraElement]:
    """Whether ``identity`` holds for the quasi-Jordan product; the expansion is the witness."""
    witness = expand(identity)
    return witness.is_zero(), witness


# -- relabelling ------------------------------------------------------------------

def _as_index_map(mapping: Mapping) -> dict[int, int]:
    def idx(v):
        return var_index(v) if isinstance(v, str) else v

    return {idx(k): idx(v) for k, v in mapping.items()}


def substitute(identity: IdentityElement, mapping: Mapping) -> IdentityElement:
    """Relabel leaves by a (possibly non-injective) variable map; unmapped variables stay."""
    m = _as_index_map(mapping)
    full = {v: m.get(v, v) for v in identity.variables()}
    return IdentityElement(((relabel(t, full), c) for t, c in identity.terms.items()), identity.mode, identity.degree)


def permute(identity: IdentityElement, sigma: Sequence[int]) -> IdentityElement:
    """Apply ``v -> sigma[v]``.  ``sigma`` must be a permutation covering the variables."""
    if not identity.is_multilinear():
        raise ValueError("permute needs a multilinear identity")
    if sorted(sigma) != list(range(len(sigma))):
        raise ValueError(f"not a permutation: {sigma}")
    return IdentityElement(((relabel(t, sigma), c) for t, c in identity.terms.items()), identity.mode, identity.degree)


def permutation_images(identity: IdentityElement, n: int) -> list[IdentityElement]:
    return [permute(identity, sigma) for sigma in itertools.permutations(range(n))]


def sn_module_span(generators: Iterable[IdentityElement], basis: MonomialBasis) -> Subspace:
    """Span of all variable permutations of the generators, in basis coordinates."""
    vectors = [
        img.to_vector(basis)
        for g in generators
        for img in permutation_images(g, basis.degree)
    ]
    return span(vectors, len(basis))


# -- linearization and lifting ------------------------------------------------------

def linearize(identity: IdentityElement, fresh: Sequence[int | str]) -> IdentityElement:
    """Full polarization of every repeated variable.

    A variable occurring ``k`` times keeps its own name for one occurrence
    and takes the next ``k - 1`` fresh variables for the others; each
    monomial becomes the sum over all ``k!`` placements of those labels.
    No factorial is divided out.
    """
    fresh_ix = [var_index(v) if isinstance(v, str) else v for v in fresh]
    used = identity.variables()
    if used & set(fresh_ix):
        raise ValueError("fresh variables already occur in the identity")
    multisets = {tuple(sorted(Counter(leaf_word(t)).items())) for t in identity.terms}
    if len(multisets) > 1:
        raise ValueError("identity is not homogeneous in each variable")
    if not multisets:
        return identity
    counts = dict(multisets.pop())
    pool = iter(fresh_ix)
    labels: dict[int, list[int]] = {}
    for v in sorted(counts):
        k = counts[v]
        if k > 1:
            extra = list(itertools.islice(pool, k - 1))
            if len(extra) < k - 1:
                raise ValueError("not enough fresh variables to linearize")
            labels[v] = [v] + extra
    if not labels:
        return identity

    out: list[tuple[Tree, Fraction]] = []
    for t, c in identity.terms.items():
        word = leaf_word(t)
        slots = {v: [i for i, x in enumerate(word) if x == v] for v in labels}
        choices = [itertools.permutations(labels[v]) for v in labels]
        for assignment in itertools.product(*choices):
            new_word = list(word)
            for v, perm in zip(labels, assignment):
                for pos, lab in zip(slots[v], perm):
                    new_word[pos] = lab
            out.append((_refill(t, new_word), c))
    return IdentityElement(out, identity.mode, identity.degree)


def _refill(t: Tree, word: Sequence[int]) -> Tree:
    it = iter(word)

    def go(s):
        if isinstance(s, int):
            return next(it)
        return (go(s[0]), go(s[1]))

    return go(t)


def lift_consequences(identity: IdentityElement, w: int | str, mode: Mode | str | None = None) -> list[IdentityElement]:
    """The ``2n + 2`` degree-raising images of a multilinear identity.

    For each variable ``x``: ``x -> xw`` and ``x -> wx``; then ``id * w`` and
    ``w * id``.
    """
    w = var_index(w) if isinstance(w, str) else w
    mode = identity.mode if mode is None else Mode.parse(mode)
    if not identity.is_multilinear():
        raise ValueError("lifting needs a multilinear identity")
    if w in identity.variables():
        raise ValueError("lifting variable already occurs in the identity")
    raw = identity.terms.items()

    def subst(x: int, repl: Tree) -> IdentityElement:
        def go(t):
            if isinstance(t, int):
                return repl if t == x else t
            return (go(t[0]), go(t[1]))

        return IdentityElement(((go(t), c) for t, c in raw), mode)

    out = []
    for x in sorted(identity.variables()):
        out.append(subst(x, (x, w)))
        out.append(subst(x, (w, x)))
    out.append(IdentityElement((((t, w), c) for t, c in raw), mode))
    out.append(IdentityElement((((w, t), c) for t, c in raw), mode))
    return out


# -- named identities -----------------------------------------------------------------

def _parse(text: str, mode: Mode = Mode.RC) -> IdentityElement:
    return IdentityElement.parse(text, mode)


RIGHT_COMM = _parse("a(bc) - a(cb)", Mode.RAW)
RIGHT_QJ = _parse("(ba)(aa) - (b(aa))a")
J = _parse("(a(bc))d + (a(bd))c + (a(cd))b - (ab)(cd) - (ac)(bd) - (ad)(bc)")
K = _parse("((ab)d)c + ((ac)d)b - (a(bc))d - (a(bd))c - (a(cd))b + a((bc)d)")
ASSOC_DERIV = associator("b", "aa", "c", Mode.RC) - associator("b", "a", "c", Mode.RC).times(0).scale(2)
WEAK_ASSOC_DERIV = associator("b", "aa", "a", Mode.RC) - associator("b", "a", "a", Mode.RC).times(0).scale(2)

# commutative linearizations of the Jordan and associator-derivation identities
JORDAN_J = _parse("((ac)b)d + ((ad)b)c + ((cd)b)a - (ab)(cd) - (ac)(bd) - (ad)(bc)", Mode.COMM)
JORDAN_K = _parse("((ab)c)d - ((ac)b)d - ((ad)b)c + ((ad)c)b + ((bd)c)a - ((cd)b)a", Mode.COMM)

REGISTRY: dict[str, IdentityElement] = {
    "right-comm": RIGHT_COMM,
    "right-qj": RIGHT_QJ,
    "J": J,
    "K": K,
    "assoc-deriv": ASSOC_DERIV,
    "weak-assoc-deriv": WEAK_ASSOC_DERIV,
}
