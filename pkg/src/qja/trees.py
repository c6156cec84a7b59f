"""Nonassociative monomials as binary trees, with canonical forms.

A tree is either a variable index (``int``) or a pair ``(left, right)``.
Plain tuples keep trees hashable and cheap to build in bulk.

Monomials are ordered by association type first and by the word of leaves
second.  Association types are ordered recursively: a larger left factor
comes first, then the left factors are compared, then the right ones.  For
degree 4 this gives ``((**)*)*, (*(**))*, (**)(**), *((**)*), *(*(**))``.
"""

from __future__ import annotations

import enum
import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Mapping, Sequence, Union

from qja.dialgebra import var_index, var_name

Tree = Union[int, tuple]


class Mode(str, enum.Enum):
    RAW = "raw"
    RC = "rc_reduced"
    COMM = "commutative"

    @classmethod
    def parse(cls, value: "str | Mode") -> "Mode":
        if isinstance(value, Mode):
            return value
        key = value.strip().lower().replace("-", "_")
        for m in cls:
            if m.value == key:
                return m
        raise ValueError(f"unknown mode: {value!r}")


def is_leaf(t: Tree) -> bool:
    return isinstance(t, int)


@lru_cache(maxsize=None)
def degree(t: Tree) -> int:
    return 1 if is_leaf(t) else degree(t[0]) + degree(t[1])


@lru_cache(maxsize=None)
def leaf_word(t: Tree) -> tuple[int, ...]:
    return (t,) if is_leaf(t) else leaf_word(t[0]) + leaf_word(t[1])


@lru_cache(maxsize=None)
def shape(t: Tree) -> Tree:
    """The association type of ``t``: all leaves replaced by 0."""
    return 0 if is_leaf(t) else (shape(t[0]), shape(t[1]))


@lru_cache(maxsize=None)
def shape_key(t: Tree) -> tuple:
    if is_leaf(t):
        return ()
    return (-degree(t[0]), shape_key(t[0]), shape_key(t[1]))


def sort_key(t: Tree) -> tuple:
    return (degree(t), shape_key(t), leaf_word(t))


def fill(sh: Tree, word: Sequence[int]) -> Tree:
    """Place the letters of ``word`` on the leaves of shape ``sh``, left to right."""
    it = iter(word)

    def go(s):
        if is_leaf(s):
            return next(it)
        return (go(s[0]), go(s[1]))

    t = go(sh)
    if next(it, None) is not None:
        raise ValueError("word longer than shape")
    return t


def relabel(t: Tree, mapping: Mapping[int, int] | Sequence[int]) -> Tree:
    if is_leaf(t):
        return mapping[t]
    return (relabel(t[0], mapping), relabel(t[1], mapping))


def variables(t: Tree) -> set[int]:
    return set(leaf_word(t))


# --- association types ------------------------------------------------------------

@lru_cache(maxsize=None)
def _shapes(n: int) -> tuple:
    if n == 1:
        return (0,)
    out = []
    for k in range(n - 1, 0, -1):
        for left in _shapes(k):
            for right in _shapes(n - k):
                out.append((left, right))
    return tuple(out)


def enumerate_association_types(n: int) -> list[Tree]:
    if n < 1:
        raise ValueError("degree must be at least 1")
    return list(_shapes(n))


# --- text form --------------------------------------------------------------------

def format_tree(t: Tree) -> str:
    if is_leaf(t):
        return var_name(t)

    def factor(s):
        return format_tree(s) if is_leaf(s) else f"({format_tree(s)})"

    return factor(t[0]) + factor(t[1])


class TreeSyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.pos = pos


def parse_tree(text: str) -> Tree:
    """Parse ``((ab)c)d``-style text.  Each group holds one or two factors."""
    s = text.replace(" ", "")
    pos = 0

    def group(closing: bool) -> Tree:
        nonlocal pos
        start = pos
        factors = []
        while pos < len(s) and s[pos] != ")":
            ch = s[pos]
            if ch == "(":
                pos += 1
                factors.append(group(True))
                if pos >= len(s) or s[pos] != ")":
                    raise TreeSyntaxError("unbalanced '('", s, pos)
                pos += 1
            elif "a" <= ch <= "z":
                factors.append(var_index(ch))
                pos += 1
            else:
                raise TreeSyntaxError(f"unexpected character {ch!r}", s, pos)
        if not factors:
            raise TreeSyntaxError("empty product", s, start)
        if len(factors) > 2:
            raise TreeSyntaxError("ambiguous product of more than two factors", s, start)
        return factors[0] if len(factors) == 1 else (factors[0], factors[1])

    if not s:
        raise TreeSyntaxError("empty expression", s, 0)
    t = group(False)
    if pos != len(s):
        raise TreeSyntaxError("unbalanced ')'", s, pos)
    return t


# --- canonical forms --------------------------------------------------------------

def _rc_moves(t: Tree, right_child: bool) -> Iterator[Tree]:
    if is_leaf(t):
        return
    left, right = t
    if right_child:
        yield (right, left)
    for l2 in _rc_moves(left, False):
        yield (l2, right)
    for r2 in _rc_moves(right, True):
        yield (left, r2)


def _comm_moves(t: Tree) -> Iterator[Tree]:
    if is_leaf(t):
        return
    left, right = t
    yield (right, left)
    for l2 in _comm_moves(left):
        yield (l2, right)
    for r2 in _comm_moves(right):
        yield (left, r2)


def moves(t: Tree, mode: Mode) -> Iterator[Tree]:
    """Trees reachable from ``t`` by one swap allowed in ``mode``."""
    mode = Mode.parse(mode)
    if mode is Mode.RC:
        return _rc_moves(t, False)
    if mode is Mode.COMM:
        return _comm_moves(t)
    return iter(())


@lru_cache(maxsize=None)
def orbit(t: Tree, mode: Mode) -> frozenset:
    seen = {t}
    queue = deque([t])
    while queue:
        u = queue.popleft()
        for v in moves(u, mode):
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return frozenset(seen)


@lru_cache(maxsize=None)
def canonicalize(t: Tree, mode: Mode) -> Tree:
    mode = Mode.parse(mode)
    if mode is Mode.RAW:
        return t
    return min(orbit(t, mode), key=sort_key)


def rc_canonicalize(t: Tree) -> Tree:
    return canonicalize(t, Mode.RC)


def comm_canonicalize(t: Tree) -> Tree:
    return canonicalize(t, Mode.COMM)


# --- bases ------------------------------------------------------------------------

@dataclass(frozen=True)
class MonomialBasis:
    degree: int
    mode: Mode
    monomials: tuple
    index: dict = field(compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    def __getitem__(self, i: int) -> Tree:
        return self.monomials[i]

    def position(self, t: Tree) -> int:
        return self.index[canonicalize(t, self.mode)]

    def labels(self) -> list[str]:
        return [format_tree(t) for t in self.monomials]


@lru_cache(maxsize=None)
def enumerate_monomial_basis(n: int, mode: Mode | str = Mode.RAW) -> MonomialBasis:
    """Canonical multilinear monomials of degree ``n`` in the first ``n`` letters."""
    mode = Mode.parse(mode)
    reps = {
        canonicalize(fill(sh, word), mode)
        for sh in enumerate_association_types(n)
        for word in itertools.permutations(range(n))
    }
    ordered = tuple(sorted(reps, key=sort_key))
    return MonomialBasis(n, mode, ordered, {t: i for i, t in enumerate(ordered)})
