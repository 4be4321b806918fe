"""Brute-force cross-checks, deliberately re-deriving results by the most
naive route available: textbook recursion for Fox derivatives, cofactor
expansion for determinants, tabulated linking numbers.  The production
paths (iterative folds, fraction-free elimination, sign-sums) are tested
against these structurally different implementations — never against
themselves.
"""

import random
from dataclasses import dataclass, field

from .algebra import GF, LaurentPoly, PolyMatrix, Ring
from .diagram import braid_to_pd, linking_number, orient_and_sign, wirtinger
from .fixtures import CORPUS
from .foxcalc import (
    TensorEvaluator, evaluate_word, expand_word, fox_derivative,
    fox_identity_defect)
from .reps import search_reps, trivial_rep

__all__ = [
    "fox_derivative_recursive", "OracleResult", "run_det_suite",
    "run_fox_suite", "run_lk_suite", "run_suite", "SUITES",
]


def fox_derivative_recursive(ev, word, j):
    """Fox derivative by direct recursion on the four defining rules.

    Splits off the first letter u and recurses on the rest v via
    d(uv) = du + Phi(u) * dv.  Quadratic in word length; used only as an
    oracle for the production fold.
    """
    letters = expand_word(word, ev.num_generators)
    if not 0 <= j < ev.num_generators:
        raise ValueError("generator index %r out of range" % (j,))

    def rec(ls):
        if not ls:
            return ev.zero()
        (g, s), rest = ls[0], ls[1:]
        if s > 0:
            head = ev.identity() if g == j else ev.zero()
        else:
            head = (ev.zero() - ev.phi(g, -1)) if g == j else ev.zero()
        return head + ev.phi(g, s) * rec(rest)

    return rec(letters)


@dataclass
class OracleResult:
    suite: str
    checks: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def check(self, ok, message):
        self.checks += 1
        if not ok:
            self.failures.append(message)

    def summary(self):
        status = "ok" if self.passed else "FAIL"
        lines = ["%s: %d checks, %s" % (self.suite, self.checks, status)]
        lines.extend("  " + f for f in self.failures[:20])
        return "\n".join(lines)


def _rand_poly(rng, ring, num_vars, max_terms=2, exp_bound=1, coeff_bound=3):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exps = tuple(rng.randint(-exp_bound, exp_bound) for _ in range(num_vars))
        if ring.kind == "Fp":
            c = rng.randint(1, ring.p - 1)
        else:
            c = rng.choice([x for x in range(-coeff_bound, coeff_bound + 1) if x])
        terms[exps] = c
    return LaurentPoly(ring, num_vars, terms)


def run_det_suite(seed=0x5EED, trials=200):
    """Fraction-free elimination vs cofactor expansion on random matrices."""
    rng = random.Random(seed)
    rings = [Ring("Z"), Ring("Q"), GF(5)]
    result = OracleResult("det")
    for k in range(trials):
        size = 2 + k % 4
        ring = rings[k % len(rings)]
        m = PolyMatrix([[_rand_poly(rng, ring, 2) for _ in range(size)]
                        for _ in range(size)])
        ok = m.det_bareiss() == m.det_cofactor()
        result.check(ok, "determinant mismatch on a %dx%d matrix over %r (trial %d)"
                     % (size, size, ring, k))
    return result


def _rand_word(rng, num_gens, max_len=8):
    return [(rng.randrange(num_gens), rng.choice([-2, -1, 1, 2]))
            for _ in range(rng.randint(0, max_len))]


def _zero_matrix(ev):
    return ev.zero()


def run_fox_suite(seed=0x5EED, trials=60):
    """Production fold vs recursive rule oracle, plus the fundamental identity.

    Covers every corpus fixture with the trivial representation over Z and
    a searched nonabelian special-linear representation of the trefoil
    over F_5; random words exercise the product rule and w * w^-1 = 1.
    """
    rng = random.Random(seed)
    result = OracleResult("fox")
    evaluators = []
    for f in CORPUS:
        pres = wirtinger(f.diagram())
        ev = TensorEvaluator.for_presentation(pres, trivial_rep(pres, Ring("Z")))
        evaluators.append((f.name, pres, ev))
    tref_pres = wirtinger(orient_and_sign(braid_to_pd([1, 1, 1], 2)))
    found = search_reps(tref_pres, 2, GF(5), special_linear=True,
                        nonabelian=True, limit=1)
    assert found, "no nonabelian SL(2,F5) trefoil representation found"
    evaluators.append(("trefoil/SL(2,F5)", tref_pres,
                       TensorEvaluator.for_presentation(tref_pres, found[0])))

    for name, pres, ev in evaluators:
        for i, rel in enumerate(pres.relators):
            ok = fox_identity_defect(ev, rel) == _zero_matrix(ev)
            result.check(ok, "fundamental identity fails: %s relator %d" % (name, i))
            for j in range(pres.num_generators):
                ok = (fox_derivative(ev, rel, j)
                      == fox_derivative_recursive(ev, rel, j))
                result.check(ok, "fold != recursion: %s relator %d d/dx%d"
                             % (name, i, j))
    name, pres, ev = evaluators[-1]
    for k in range(trials):
        u = _rand_word(rng, pres.num_generators)
        v = _rand_word(rng, pres.num_generators)
        j = rng.randrange(pres.num_generators)
        fold = fox_derivative(ev, u + v, j)
        rec = fox_derivative_recursive(ev, u + v, j)
        result.check(fold == rec, "fold != recursion on random word (trial %d)" % k)
        product = (fox_derivative(ev, u, j)
                   + evaluate_word(ev, u) * fox_derivative(ev, v, j))
        result.check(fold == product, "product rule fails (trial %d)" % k)
        winv = [(g, -e) for g, e in reversed(u)]
        result.check(fox_derivative(ev, u + winv, j) == ev.zero(),
                     "d(w w^-1) != 0 (trial %d)" % k)
        result.check(evaluate_word(ev, u + winv) == ev.identity(),
                     "Phi(w w^-1) != I (trial %d)" % k)
        result.check(fox_identity_defect(ev, u) == ev.zero(),
                     "word identity defect nonzero (trial %d)" % k)
    return result


def run_lk_suite(seed=None):
    """Computed linking numbers vs the tabulated values, on every diagram."""
    result = OracleResult("lk")
    for f in CORPUS:
        for which, d in (("pd", f.diagram()), ("alt", f.alt_diagram())):
            for (i, j), expect in f.linking.items():
                got = linking_number(d, i, j)
                result.check(got == expect,
                             "lk(K%d,K%d) on %s[%s]: got %d, expected %d"
                             % (i + 1, j + 1, f.name, which, got, expect))
                sym = linking_number(d, j, i)
                result.check(sym == expect,
                             "lk symmetry fails on %s[%s]" % (f.name, which))
    return result


SUITES = {"det": run_det_suite, "fox": run_fox_suite, "lk": run_lk_suite}


def run_suite(name, seed=0x5EED):
    if name == "all":
        out = []
        for key in ("det", "fox", "lk"):
            out.extend(run_suite(key, seed))
        return out
    if name not in SUITES:
        raise ValueError("unknown oracle suite %r (use det, fox, lk or all)" % (name,))
    fn = SUITES[name]
    return [fn(seed) if name != "lk" else fn()]
