"""Free associative dialgebra in normal form.

A monomial of the free dialgebra is a word with one distinguished letter,
the *center*.  Any parenthesized product of letters under ``⊣`` and ``⊢``
collapses to such a word, and the words with a chosen center form a basis.
Coefficients are exact rationals (:class:`fractions.Fraction`).

Variables are small integers; ``0`` prints as ``a``, ``1`` as ``b`` and so on.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Sequence, Union

from qja.rational import format_coeff, parse_coeff

ALPHABET = "abcdefghijklmnopqrstuvwxyz"

LEFT = "⊣"
RIGHT = "⊢"


def var_name(index: int) -> str:
    if not 0 <= index < len(ALPHABET):
        raise ValueError(f"variable index out of range: {index}")
    return ALPHABET[index]


def var_index(letter: str) -> int:
    i = ALPHABET.find(letter)
    if len(letter) != 1 or i < 0:
        raise ValueError(f"not a variable letter: {letter!r}")
    return i


@dataclass(frozen=True, order=True)
class DialgebraMonomial:
    """A word over the variables with a 1-based center position."""

    word: tuple[int, ...]
    center: int

    def __post_init__(self) -> None:
        if not self.word:
            raise ValueError("empty dialgebra monomial")
        if not 1 <= self.center <= len(self.word):
            raise ValueError(f"center {self.center} outside word of length {len(self.word)}")

    @property
    def degree(self) -> int:
        return len(self.word)

    @property
    def center_variable(self) -> int:
        return self.word[self.center - 1]

    def sort_key(self) -> tuple:
        return (len(self.word), self.center, self.word)

    def relabel(self, mapping: Mapping[int, int] | Sequence[int]) -> "DialgebraMonomial":
        return DialgebraMonomial(tuple(mapping[v] for v in self.word), self.center)

    def __str__(self) -> str:
        out = []
        for pos, v in enumerate(self.word, start=1):
            out.append(f"[{var_name(v)}]" if pos == self.center else var_name(v))
        return "".join(out)

    @classmethod
    def parse(cls, text: str) -> "DialgebraMonomial":
        m = re.fullmatch(r"([a-z]*)\[([a-z])\]([a-z]*)", text.strip())
        if m is None:
            raise ValueError(f"bad dialgebra monomial: {text!r}")
        before, c, after = m.groups()
        word = tuple(var_index(ch) for ch in before + c + after)
        return cls(word, len(before) + 1)

    @classmethod
    def generator(cls, v: int) -> "DialgebraMonomial":
        return cls((v,), 1)


def left_prod(m1: DialgebraMonomial, m2: DialgebraMonomial) -> DialgebraMonomial:
    """``m1 ⊣ m2``: concatenate, keep the center of ``m1``."""
    return DialgebraMonomial(m1.word + m2.word, m1.center)


def right_prod(m1: DialgebraMonomial, m2: DialgebraMonomial) -> DialgebraMonomial:
    """``m1 ⊢ m2``: concatenate, keep the center of ``m2``."""
    return DialgebraMonomial(m1.word + m2.word, len(m1.word) + m2.center)


MonomialProduct = Callable[[DialgebraMonomial, DialgebraMonomial], DialgebraMonomial]


# --- unreduced products -------------------------------------------------------

@dataclass(frozen=True)
class DiNode:
    """A product node ``left op right`` of an unreduced dialgebra expression."""

    op: str
    left: "DialgebraTree"
    right: "DialgebraTree"

    def __post_init__(self) -> None:
        if self.op not in (LEFT, RIGHT):
            raise ValueError(f"unknown dialgebra operation: {self.op!r}")


DialgebraTree = Union[int, DiNode]


def dleft(x: DialgebraTree, y: DialgebraTree) -> DiNode:
    return DiNode(LEFT, x, y)


def dright(x: DialgebraTree, y: DialgebraTree) -> DiNode:
    return DiNode(RIGHT, x, y)


def leaves(tree: DialgebraTree) -> list[int]:
    if isinstance(tree, int):
        return [tree]
    return leaves(tree.left) + leaves(tree.right)


def center_of(tree: DialgebraTree) -> int:
    if isinstance(tree, int):
        return tree
    return center_of(tree.left if tree.op == LEFT else tree.right)


def _center_position(tree: DialgebraTree) -> int:
    # 1-based index among the leaves of the leaf picked by center_of
    if isinstance(tree, int):
        return 1
    if tree.op == LEFT:
        return _center_position(tree.left)
    return len(leaves(tree.left)) + _center_position(tree.right)


def normalize(tree: DialgebraTree) -> DialgebraMonomial:
    return DialgebraMonomial(tuple(leaves(tree)), _center_position(tree))


# --- linear combinations --------------------------------------------------------

class DialgebraElement:
    """Sparse rational linear combination of dialgebra monomials.

    Immutable; zero coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[DialgebraMonomial, object] | Iterable[tuple[DialgebraMonomial, object]] = ()):
        acc: dict[DialgebraMonomial, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, c in items:
            c = Fraction(c)
            if c:
                acc[mono] = acc.get(mono, Fraction(0)) + c
        self._terms = {m: c for m, c in acc.items() if c}
        self._hash = None

    @classmethod
    def monomial(cls, mono: DialgebraMonomial, coeff=1) -> "DialgebraElement":
        return cls({mono: coeff})

    @classmethod
    def generator(cls, v: int) -> "DialgebraElement":
        return cls.monomial(DialgebraMonomial.generator(v))

    @property
    def terms(self) -> dict[DialgebraMonomial, Fraction]:
        return dict(self._terms)

    def items(self) -> list[tuple[DialgebraMonomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda mc: mc[0].sort_key())

    def coeff(self, mono: DialgebraMonomial) -> Fraction:
        return self._terms.get(mono, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[DialgebraMonomial]:
        return iter(m for m, _ in self.items())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, DialgebraElement):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: "DialgebraElement") -> "DialgebraElement":
        if not isinstance(other, DialgebraElement):
            return NotImplemented
        return DialgebraElement(itertools.chain(self._terms.items(), other._terms.items()))

    def __neg__(self) -> "DialgebraElement":
        return self.scale(-1)

    def __sub__(self, other: "DialgebraElement") -> "DialgebraElement":
        if not isinstance(other, DialgebraElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "DialgebraElement":
        c = Fraction(c)
        return DialgebraElement({m: c * v for m, v in self._terms.items()})

    def __rmul__(self, c) -> "DialgebraElement":
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def product(self, other: "DialgebraElement", rule: MonomialProduct) -> "DialgebraElement":
        return DialgebraElement(
            (rule(m1, m2), c1 * c2)
            for m1, c1 in self._terms.items()
            for m2, c2 in other._terms.items()
        )

    def left(self, other: "DialgebraElement") -> "DialgebraElement":
        return self.product(other, left_prod)

    def right(self, other: "DialgebraElement") -> "DialgebraElement":
        return self.product(other, right_prod)

    def relabel(self, mapping) -> "DialgebraElement":
        return DialgebraElement((m.relabel(mapping), c) for m, c in self._terms.items())

    def __str__(self) -> str:
        return format_terms((str(m), c) for m, c in self.items())

    def __repr__(self) -> str:
        return f"DialgebraElement({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "DialgebraElement":
        return cls((DialgebraMonomial.parse(m), c) for c, m in split_terms(text))


def format_terms(terms: Iterable[tuple[str, Fraction]]) -> str:
    """Render ``c1 m1 + c2 m2 - ...``; unit coefficients are omitted."""
    parts = []
    for mono, c in terms:
        sign = "-" if c < 0 else "+"
        mag = format_coeff(abs(c))
        body = mono if mag == "1" else f"{mag} {mono}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts) if parts else "0"


_TERM_SPLIT = re.compile(r"\s*([+-])\s*")


def split_terms(text: str) -> list[tuple[Fraction, str]]:
    """Inverse of :func:`format_terms` at the level of (coefficient, monomial text)."""
    text = text.strip()
    if text == "0":
        return []
    out: list[tuple[Fraction, str]] = []
    pos = 0
    sign = 1
    if text[:1] in "+-":
        sign = -1 if text[0] == "-" else 1
        pos = 1
    # split at +/- that are outside parentheses
    depth = 0
    start = pos
    chunks: list[tuple[int, str]] = []
    i = pos
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0:
            chunks.append((sign, text[start:i]))
            sign = -1 if ch == "-" else 1
            start = i + 1
        i += 1
    chunks.append((sign, text[start:]))
    for s, chunk in chunks:
        chunk = chunk.strip()
        if not chunk:
            raise ValueError(f"empty term in {text!r}")
        coeff, mono = parse_coeff(chunk)
        out.append((s * coeff, mono))
    return out


# --- bases and axioms -----------------------------------------------------------

def enumerate_dialgebra_basis(degree: int, variables: Sequence[int] | None = None) -> list[DialgebraMonomial]:
    """Multilinear normal-form monomials, ordered by center position then word."""
    if degree < 1:
        raise ValueError("degree must be at least 1")
    if variables is None:
        variables = range(degree)
    variables = sorted(variables)
    if len(variables) != degree:
        raise ValueError("multilinear basis needs exactly `degree` variables")
    return [
        DialgebraMonomial(word, k)
        for k in range(1, degree + 1)
        for word in itertools.permutations(variables)
    ]


AXIOMS = (
    "(x⊣y)⊣z = x⊣(y⊣z)",
    "(x⊢y)⊢z = x⊢(y⊢z)",
    "(x⊢y)⊣z = x⊢(y⊣z)",
    "(x⊣y)⊢z = (x⊢y)⊢z",
    "x⊣(y⊣z) = x⊣(y⊢z)",
)


@dataclass
class AxiomResult:
    axiom: str
    holds: bool
    witness: tuple | None = None  # (x, y, z, lhs - rhs)


def check_dialgebra_axioms(
    triples: Iterable[tuple[DialgebraElement, DialgebraElement, DialgebraElement]],
    left: MonomialProduct = left_prod,
    right: MonomialProduct = right_prod,
) -> list[AxiomResult]:
    """Evaluate the five dialgebra axioms on every triple.

    ``left``/``right`` default to the normal-form products; passing other
    rules lets tests confirm that broken products are caught.
    """

    def L(x, y):
        return x.product(y, left)

    def R(x, y):
        return x.product(y, right)

    sides = (
        lambda x, y, z: (L(L(x, y), z), L(x, L(y, z))),
        lambda x, y, z: (R(R(x, y), z), R(x, R(y, z))),
        lambda x, y, z: (L(R(x, y), z), R(x, L(y, z))),
        lambda x, y, z: (R(L(x, y), z), R(R(x, y), z)),
        lambda x, y, z: (L(x, L(y, z)), L(x, R(y, z))),
    )
    results = [AxiomResult(name, True) for name in AXIOMS]
    for x, y, z in triples:
        for res, f in zip(results, sides):
            if not res.holds:
                continue
            lhs, rhs = f(x, y, z)
            if lhs != rhs:
                res.holds = False
                res.witness = (x, y, z, lhs - rhs)
    return results
