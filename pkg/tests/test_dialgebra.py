from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import dialgebra_trees, multilinear_dialgebra_trees
from qja.checks import random_triples
from qja.dialgebra import (
    DialgebraElement,
    DialgebraMonomial,
    DiNode,
    LEFT,
    center_of,
    check_dialgebra_axioms,
    dleft,
    dright,
    enumerate_dialgebra_basis,
    leaves,
    left_prod,
    normalize,
    right_prod,
)

a, b, c, d = range(4)
M = DialgebraMonomial.parse
E = DialgebraElement.parse


def gen(v):
    return DialgebraElement.generator(v)


def center_by_name(tree):
    """Oracle for multilinear trees: locate the center letter by its name."""
    word = leaves(tree)
    return DialgebraMonomial(tuple(word), word.index(center_of(tree)) + 1)


class TestCenter:
    def test_leaf(self):
        assert center_of(a) == a

    def test_left_twice(self):
        assert center_of(dleft(dleft(a, b), c)) == a

    def test_mixed(self):
        assert center_of(dleft(dright(a, b), c)) == b


class TestNormalize:
    def test_two_leaves(self):
        m = normalize(dleft(a, b))
        assert (m.word, m.center) == ((a, b), 1)
        assert str(m) == "[a]b"

    def test_right_over_left(self):
        m = normalize(dright(c, dleft(a, b)))
        assert m == M("c[a]b")
        assert (m.word, m.center) == ((c, a, b), 2)

    def test_four_leaves(self):
        m = normalize(dleft(dright(a, b), dleft(c, d)))
        assert (m.word, m.center) == ((a, b, c, d), 2)

    def test_repeated_letters_use_positions(self):
        # a ⊢ (a ⊣ a): the middle a is the center
        assert normalize(dright(a, dleft(a, a))) == DialgebraMonomial((a, a, a), 2)

    @given(dialgebra_trees())
    def test_idempotent_on_normal_forms(self, t):
        m = normalize(t)
        # rebuild (a1 ⊢ ... ⊢ ak) ⊣ (... ⊣ an) from m and normalize again
        word, k = list(m.word), m.center
        tree = word[k - 1]
        for x in reversed(word[:k - 1]):
            tree = dright(x, tree)
        right = None
        for x in reversed(word[k:]):
            right = x if right is None else dleft(x, right)
        if right is not None:
            tree = dleft(tree, right)
        assert normalize(tree) == m

    @settings(max_examples=500)
    @given(dialgebra_trees(max_leaves=5, letters=5))
    def test_products_are_coherent_with_normal_form(self, t):
        if isinstance(t, int):
            return
        rule = left_prod if t.op == LEFT else right_prod
        assert normalize(t) == rule(normalize(t.left), normalize(t.right))

    @settings(max_examples=200)
    @given(multilinear_dialgebra_trees())
    def test_matches_center_by_name_on_multilinear_trees(self, t):
        assert normalize(t) == center_by_name(t)


class TestProducts:
    def test_left_degree_one(self):
        assert left_prod(M("[a]"), M("[b]")) == M("[a]b")

    def test_left_concatenates(self):
        assert left_prod(M("[a]b"), M("[c]d")) == M("[a]bcd")
        assert left_prod(M("[a]b"), M("[c]d")) == normalize(dleft(dleft(a, b), dleft(c, d)))

    def test_left_keeps_inner_center(self):
        assert left_prod(M("b[a]"), M("[c]")) == M("b[a]c")

    def test_right_degree_one(self):
        assert right_prod(M("[a]"), M("[b]")) == M("a[b]")

    def test_right_shifts_center(self):
        assert right_prod(M("[c]"), M("[a]b")) == M("c[a]b")
        assert right_prod(M("[a]b"), M("[c]d")) == M("ab[c]d")
        assert right_prod(M("[a]b"), M("[c]d")) == normalize(dright(dleft(a, b), dleft(c, d)))


class TestElements:
    def test_scale_by_zero(self):
        assert (E("[a]b + b[a]").scale(0)).is_zero()

    def test_bilinear(self):
        assert (gen(a) + gen(b)).left(gen(c)) == E("[a]c + [b]c")

    def test_quasi_jordan_by_hand(self):
        ab = gen(a).left(gen(b)) + gen(b).right(gen(a))
        got = ab.left(gen(c)) + gen(c).right(ab)
        assert got == E("[a]bc + b[a]c + c[a]b + cb[a]")

    def test_no_zero_coefficients_stored(self):
        x = E("[a]b - [a]b + 2 b[a]")
        assert x.terms == {M("b[a]"): Fraction(2)}

    @given(st.integers(0, 2**32))
    def test_x_minus_x_is_zero(self, seed):
        x, _, _ = random_triples(1, seed)[0]
        assert (x - x) == 0
        assert x + x == x.scale(2)

    def test_print_order_and_coefficients(self):
        x = DialgebraElement({M("cb[a]"): 1, M("[a]bc"): -2, M("b[a]c"): Fraction(1, 3)})
        assert str(x) == "-2 [a]bc + (1/3) b[a]c + cb[a]"
        assert str(DialgebraElement()) == "0"


class TestGrammar:
    @pytest.mark.parametrize("text", ["[a]bcd", "dc[b]a", "[z]", "aa[a]a"])
    def test_monomial_round_trip(self, text):
        assert str(M(text)) == text

    @pytest.mark.parametrize("bad", ["abc", "[a][b]", "[ab]c", "a[B]", ""])
    def test_monomial_rejects(self, bad):
        with pytest.raises(ValueError):
            M(bad)

    def test_element_round_trip(self):
        for seed in range(30):
            x, y, z = random_triples(1, seed)[0]
            w = x.left(y) - z.right(x).scale(Fraction(2, 5))
            assert E(str(w)) == w

    def test_center_bounds(self):
        with pytest.raises(ValueError):
            DialgebraMonomial((a, b), 3)


class TestBasis:
    def test_degree_three_order(self):
        got = [str(m) for m in enumerate_dialgebra_basis(3)]
        assert got == [
            "[a]bc", "[a]cb", "[b]ac", "[b]ca", "[c]ab", "[c]ba",
            "a[b]c", "a[c]b", "b[a]c", "b[c]a", "c[a]b", "c[b]a",
            "ab[c]", "ac[b]", "ba[c]", "bc[a]", "ca[b]", "cb[a]",
        ]

    def test_degree_four(self):
        basis = enumerate_dialgebra_basis(4)
        assert len(basis) == 96
        assert str(basis[0]) == "[a]bcd" and str(basis[-1]) == "dcb[a]"
        # first monomial with center 3
        assert str(basis[48]) == "ab[c]d"

    def test_degree_one(self):
        assert enumerate_dialgebra_basis(1) == [M("[a]")]

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_size_and_distinct(self, n):
        basis = enumerate_dialgebra_basis(n)
        assert len(basis) == len(set(basis)) == n * [1, 1, 2, 6, 24, 120][n]

    def test_degree_zero_rejected(self):
        with pytest.raises(ValueError):
            enumerate_dialgebra_basis(0)


class TestAxioms:
    def test_generators(self):
        assert all(r.holds for r in check_dialgebra_axioms([(gen(a), gen(b), gen(c))]))

    def test_random_elements(self):
        results = check_dialgebra_axioms(random_triples(100, seed=1))
        assert [r.holds for r in results] == [True] * 5

    @settings(max_examples=100)
    @given(st.integers(0, 2**32))
    def test_random_elements_property(self, seed):
        assert all(r.holds for r in check_dialgebra_axioms(random_triples(1, seed)))

    def test_mutated_left_product_breaks_mixed_associativity(self):
        def bad_left(m1, m2):
            return DialgebraMonomial(m1.word + m2.word, m2.center)

        results = check_dialgebra_axioms([(gen(a), gen(b), gen(c))], left=bad_left)
        assert not results[2].holds
        x, y, z, diff = results[2].witness
        assert diff == E("[a]bc - a[b]c")

    def test_unknown_operation(self):
        with pytest.raises(ValueError):
            DiNode("*", a, b)
