from pathlib import Path

import pytest
from hypothesis import strategies as st

from qja.dialgebra import LEFT, RIGHT, DiNode

DATA = Path(__file__).parent / "data"


def read_grid(name: str) -> list[str]:
    return [ln.rstrip("\n") for ln in (DATA / name).read_text().splitlines() if ln.strip()]


@pytest.fixture
def grid():
    return read_grid


def trees(max_leaves: int = 5, letters: int = 5):
    """Random nonassociative monomials, possibly with repeated letters."""
    leaf = st.integers(0, letters - 1)
    return st.recursive(leaf, lambda kids: st.tuples(kids, kids), max_leaves=max_leaves)


def multilinear_trees(n: int):
    """Random trees on exactly the letters 0..n-1."""

    @st.composite
    def build(draw):
        perm = draw(st.permutations(range(n)))

        def grow(word):
            if len(word) == 1:
                return word[0]
            k = draw(st.integers(1, len(word) - 1))
            return (grow(word[:k]), grow(word[k:]))

        return grow(list(perm))

    return build()


def dialgebra_trees(max_leaves: int = 5, letters: int = 4):
    leaf = st.integers(0, letters - 1)
    return st.recursive(
        leaf,
        lambda kids: st.builds(DiNode, st.sampled_from([LEFT, RIGHT]), kids, kids),
        max_leaves=max_leaves,
    )


@st.composite
def multilinear_dialgebra_trees(draw, max_leaves: int = 5):
    n = draw(st.integers(1, max_leaves))
    word = draw(st.permutations(range(n)))

    def grow(w):
        if len(w) == 1:
            return w[0]
        k = draw(st.integers(1, len(w) - 1))
        return DiNode(draw(st.sampled_from([LEFT, RIGHT])), grow(w[:k]), grow(w[k:]))

    return grow(list(word))
