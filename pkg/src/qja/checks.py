"""Verification suite: every structural fact about the quasi-Jordan identities
in degree at most 4, grouped into report sections."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction

from qja import reference
from qja.dialgebra import (
    DialgebraElement,
    DialgebraMonomial,
    check_dialgebra_axioms,
    left_prod,
    right_prod,
)
from qja.expansion import build_expansion_matrix, qj_expand
from qja.identities import (
    ASSOC_DERIV,
    J,
    JORDAN_J,
    JORDAN_K,
    K,
    RIGHT_COMM,
    RIGHT_QJ,
    WEAK_ASSOC_DERIV,
    IdentityElement,
    associator,
    expand,
    lift_consequences,
    linearize,
    permute,
    sn_module_span,
    substitute,
    verify_identity,
)
from qja.linalg import intersect, nullspace_canonical, rank, span, subspace_sum
from qja.trees import Mode, enumerate_monomial_basis, parse_tree


@dataclass
class Assertion:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class Section:
    title: str
    assertions: list[Assertion] = field(default_factory=list)
    tables: list[tuple[str, list[str]]] = field(default_factory=list)

    def check(self, name: str, passed: bool, detail: str = "") -> bool:
        self.assertions.append(Assertion(name, bool(passed), detail))
        return bool(passed)

    def table(self, caption: str, lines: list[str]) -> None:
        self.tables.append((caption, list(lines)))

    @property
    def passed(self) -> bool:
        return all(a.passed for a in self.assertions)


@dataclass
class ReportDocument:
    sections: list[Section]

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.sections)

    def failures(self) -> list[tuple[str, Assertion]]:
        return [(s.title, a) for s in self.sections for a in s.assertions if not a.passed]

    def render_text(self) -> str:
        out = []
        for s in self.sections:
            out.append(f"== {s.title} ==")
            for a in s.assertions:
                mark = "PASS" if a.passed else "FAIL"
                line = f"[{mark}] {a.name}"
                if a.detail:
                    line += f"  ({a.detail})"
                out.append(line)
            for caption, lines in s.tables:
                out.append(f"-- {caption}")
                out.extend(f"   {ln}" for ln in lines)
            out.append("")
        total = sum(len(s.assertions) for s in self.sections)
        failed = len(self.failures())
        out.append(f"overall: {'PASS' if self.passed else 'FAIL'} ({total - failed}/{total} assertions)")
        return "\n".join(out) + "\n"

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "sections": [
                {
                    "title": s.title,
                    "passed": s.passed,
                    "assertions": [{"name": a.name, "passed": a.passed, "detail": a.detail} for a in s.assertions],
                    "tables": [{"caption": c, "lines": ls} for c, ls in s.tables],
                }
                for s in self.sections
            ],
        }

    def render_json(self) -> str:
        return json.dumps(self.to_json(), indent=2, ensure_ascii=False) + "\n"


def _ident(text: str, mode: Mode = Mode.RC) -> IdentityElement:
    return IdentityElement.parse(text, mode)


# -- dialgebra engine ------------------------------------------------------------------

def random_element(rng: random.Random, max_degree: int = 3, letters: int = 3) -> DialgebraElement:
    terms = []
    for _ in range(rng.randint(1, 3)):
        n = rng.randint(1, max_degree)
        word = tuple(rng.randrange(letters) for _ in range(n))
        terms.append((DialgebraMonomial(word, rng.randint(1, n)), Fraction(rng.randint(-3, 3), rng.randint(1, 2))))
    return DialgebraElement(terms)


def random_triples(count: int, seed: int = 0) -> list[tuple[DialgebraElement, ...]]:
    rng = random.Random(seed)
    return [tuple(random_element(rng) for _ in range(3)) for _ in range(count)]


def _broken_left(m1: DialgebraMonomial, m2: DialgebraMonomial) -> DialgebraMonomial:
    return DialgebraMonomial(m1.word + m2.word, m2.center)


def dialgebra_axiom_check(samples: int = 100, seed: int = 0) -> Section:
    sec = Section("dialgebra axioms")
    results = check_dialgebra_axioms(random_triples(samples, seed))
    for r in results:
        sec.check(f"{r.axiom} on {samples} random triples", r.holds,
                  "" if r.holds else f"witness {r.witness[3]}")
    gens = [DialgebraElement.generator(v) for v in range(3)]
    mutant = check_dialgebra_axioms([tuple(gens)], left=_broken_left, right=right_prod)
    sec.check("a wrong ⊣ center rule violates (x⊢y)⊣z = x⊢(y⊣z)", not mutant[2].holds,
              f"witness {mutant[2].witness[3]}" if mutant[2].witness else "")
    return sec


# -- displayed expansions ----------------------------------------------------------------

def _expands_to(tree: str, expected: str) -> bool:
    return qj_expand(parse_tree(tree)) == DialgebraElement.parse(expected)


def expansion_checks() -> Section:
    sec = Section("expansions")
    sec.check("a(bc) expands to [a]bc + [a]cb + bc[a] + cb[a]",
              _expands_to("a(bc)", "[a]bc + [a]cb + bc[a] + cb[a]"))
    ok, _ = verify_identity(RIGHT_COMM)
    sec.check("right commutativity a(bc) = a(cb) holds", ok)

    lhs = qj_expand(parse_tree("(ba)(aa)"))
    rhs = qj_expand(parse_tree("(b(aa))a"))
    target = DialgebraElement.parse("2 [b]aaa + 2 a[b]aa + 2 aa[b]a + 2 aaa[b]")
    sec.check("(ba)a² and (ba²)a both expand to 2[b]aaa + 2a[b]aa + 2aa[b]a + 2aaa[b]",
              lhs == target and rhs == target)
    ok, _ = verify_identity(RIGHT_QJ)
    sec.check("right quasi-Jordan identity (ba)a² = (ba²)a holds", ok)

    diff = _ident("(aa)(ab) - a((aa)b)", Mode.RAW)
    ok, witness = verify_identity(diff)
    w = DialgebraMonomial.parse("[a]aba")
    sec.check("a²(ab) = a(a²b) fails", not ok and witness.coeff(w) == 1, f"witness {witness}")

    ad = expand(associator("b", "aa", "c"))
    target = DialgebraElement.parse("-2 [b]caa + 2 c[b]aa + 2 aa[b]c - 2 aac[b]")
    sec.check("(b,a²,c) expands to -2[b]caa + 2c[b]aa + 2aa[b]c - 2aac[b]", ad == target)
    bac_a = expand(associator("b", "a", "c").times(0))
    sec.check("(b,a,c)a expands to -[b]caa + c[b]aa + aa[b]c - aac[b]", bac_a.scale(2) == target)
    ok, _ = verify_identity(ASSOC_DERIV)
    sec.check("associator-derivation identity (b,a²,c) = 2(b,a,c)a holds", ok)
    return sec


# -- degrees 2 and 3 -------------------------------------------------------------------------

def degree2_checks() -> Section:
    sec = Section("degree 2")
    e2 = build_expansion_matrix(2, Mode.RAW)
    r2 = rank(e2.matrix)
    sec.check("E2 is 4x2 with nullity 0", e2.shape == (4, 2) and r2 == 2, f"rank(E2) = {r2}")
    return sec


def degree3_checks() -> Section:
    sec = Section("degree 3")
    e3 = build_expansion_matrix(3, Mode.RAW)
    r3 = rank(e3.matrix)
    sec.check("E3 is 18x12", e3.shape == (18, 12))
    sec.check("rank(E3) = 9, nullity 3", r3 == 9 and e3.matrix.cols - r3 == 3,
              f"rank(E3) = {r3}, nullity = {e3.matrix.cols - r3}")
    basis = e3.column_basis
    null = [IdentityElement.from_vector(v, basis) for v in nullspace_canonical(e3.matrix)]
    expected = [_ident(s, Mode.RAW) for s in reference.DEGREE3_NULLSPACE]
    sec.check("E3 nullspace = permutations of right commutativity", null == expected)
    orbit = sn_module_span([RIGHT_COMM], basis)
    sec.check("S3-module of right commutativity has dim 3 and equals the nullspace",
              orbit.dim == 3 and orbit == span([v.to_vector(basis) for v in null], len(basis)),
              f"dim = {orbit.dim}")
    sec.table("degree 3 nullspace identities", [str(v) for v in null])
    return sec


# -- degree 4 -------------------------------------------------------------------------------

def degree4_checks() -> Section:
    sec = Section("degree 4")
    e4 = build_expansion_matrix(4, Mode.RC)
    basis = e4.column_basis
    r = rank(e4.matrix)
    sec.check("E4 (rc-reduced) is 96x60", e4.shape == (96, 60))
    sec.check(f"rank(E4) = {reference.E4_RANK}, nullity {reference.E4_NULLITY}",
              r == reference.E4_RANK and 60 - r == reference.E4_NULLITY,
              f"rank(E4) = {r}, nullity = {60 - r}")

    vectors = nullspace_canonical(e4.matrix)
    null = [IdentityElement.from_vector(v, basis) for v in vectors]
    expected = [_ident(s) for s in reference.DEGREE4_NULLSPACE]
    mismatched = [i + 1 for i, (a, b) in enumerate(zip(null, expected)) if a != b]
    sec.check("16 canonical nullspace vectors match the expected identities",
              len(null) == 16 and not mismatched, f"mismatched: {mismatched}" if mismatched else "")
    sec.check("nullspace vector 5 = K", len(null) > 4 and null[4] == K)
    sec.check("every nullspace vector expands to zero", all(verify_identity(v)[0] for v in null))

    null_space = span(vectors, len(basis))
    j_mod = sn_module_span([J], basis)
    k_mod = sn_module_span([K], basis)
    sec.check(f"dim J-module = {reference.J_MODULE_DIM}", j_mod.dim == reference.J_MODULE_DIM,
              f"dim J-module = {j_mod.dim}")
    sec.check("J-module = span(vectors 1-4)", j_mod == span(vectors[:4], len(basis)))
    sec.check(f"dim K-module = {reference.K_MODULE_DIM}", k_mod.dim == reference.K_MODULE_DIM,
              f"dim K-module = {k_mod.dim}")
    sec.check("K-module = span(vectors 5-16)", k_mod == span(vectors[4:], len(basis)))
    cap = intersect(j_mod, k_mod)
    sec.check("J-module ∩ K-module = 0", cap.dim == 0, f"dim = {cap.dim}")
    sec.check("J-module + K-module = nullspace(E4)", subspace_sum(j_mod, k_mod) == null_space)
    sec.check("K is not a consequence of J", not j_mod.contains(K.to_vector(basis)))
    sec.check("J is not a consequence of K", not k_mod.contains(J.to_vector(basis)))
    sec.table("degree 4 nullspace identities", [f"{i:2d}: {v}" for i, v in enumerate(null, 1)])
    return sec


def completeness_check() -> Section:
    sec = Section("raw degree 4 completeness")
    e4 = build_expansion_matrix(4, Mode.RAW)
    basis = e4.column_basis
    r = rank(e4.matrix)
    sec.check("E4 (raw) is 96x120 with rank 44, nullity 76",
              e4.shape == (96, 120) and r == 44 and 120 - r == 76, f"rank = {r}, nullity = {120 - r}")
    null_space = span(nullspace_canonical(e4.matrix), len(basis))
    lifted = sn_module_span(lift_consequences(RIGHT_COMM, "d", Mode.RAW), basis)
    sec.check("S4-closed liftings of right commutativity span dim 60", lifted.dim == 60, f"dim = {lifted.dim}")
    new = sn_module_span([J.in_mode(Mode.RAW), K.in_mode(Mode.RAW)], basis)
    total = subspace_sum(lifted, new)
    sec.check("liftings + J + K span the raw nullspace (dim 76)",
              total.dim == 76 and total == null_space, f"dim = {total.dim}")
    cap = intersect(lifted, new)
    sec.check("intersection of liftings with the J,K span reported", True, f"dim = {cap.dim}")
    return sec


def substitution_checks() -> Section:
    sec = Section("substitution and linearization")
    j_sub = substitute(J, {"a": "b", "b": "a", "c": "a", "d": "a"})
    sec.check("J with a->b, b,c,d->a gives 3(ba²)a - 3(ba)a²", j_sub == _ident("3 (b(aa))a - 3 (ba)(aa)"),
              str(j_sub))
    s = j_sub.scalar_multiple_of(RIGHT_QJ)
    sec.check("that is -3 times (ba)a² - (ba²)a", s == -3, f"scalar {s}")

    qj = substitute(RIGHT_QJ.scale(-1), {"a": "b", "b": "a"})
    lin = linearize(qj, ["c", "d"])
    s = lin.scalar_multiple_of(J)
    sec.check("linearized (ab²)b - (ab)b² = 2 J", s == 2, f"scalar {s}")

    k_sub = substitute(K, {"a": "b", "d": "c", "b": "a", "c": "a"})
    weak = associator("b", "a", "c", Mode.RC).times(0).scale(2) - associator("b", "aa", "c", Mode.RC)
    sec.check("K with a->b, d->c, b,c->a gives 2(b,a,c)a - (b,a²,c)", k_sub == weak, str(k_sub))
    nonlin = substitute(k_sub, {"a": "b", "b": "a", "c": "d"})
    lin = linearize(nonlin, ["c"])
    s = lin.scalar_multiple_of(K)
    sec.check("linearized 2(a,b,d)b - (a,b²,d) = 2 K", s == 2, f"scalar {s}")
    return sec


def jordan_checks() -> Section:
    sec = Section("Jordan algebras")
    basis = enumerate_monomial_basis(4, Mode.COMM)
    sec.check("commutative multilinear degree-4 space has dim 15", len(basis) == 15)
    swapped = permute(JORDAN_J, [0, 2, 1, 3])
    sec.check("K(a,b,c,d) = J(a,c,b,d) - J(a,b,c,d)", JORDAN_K == swapped - JORDAN_J)
    sec.check("J(a,b,c,d) is symmetric in c, d", permute(JORDAN_J, [0, 1, 3, 2]) == JORDAN_J)
    sec.check("(b,a²,c) - 2(b,a,c)a at c = a gives (b,a²,a) - 2(b,a,a)a",
              substitute(ASSOC_DERIV, {"c": "a"}) == WEAK_ASSOC_DERIV)
    sec.check("weak associator-derivation identity holds", verify_identity(WEAK_ASSOC_DERIV)[0])
    return sec


def full_report() -> ReportDocument:
    return ReportDocument([
        dialgebra_axiom_check(),
        expansion_checks(),
        degree2_checks(),
        degree3_checks(),
        degree4_checks(),
        substitution_checks(),
        completeness_check(),
        jordan_checks(),
    ])
