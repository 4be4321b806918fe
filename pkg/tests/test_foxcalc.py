import random

import pytest

from linktorsion.algebra import GF, PolyMatrix, Ring, parse_poly, render_poly
from linktorsion.diagram import (
    WirtingerPresentation, braid_to_pd, orient_and_sign, parse_pd, wirtinger)
from linktorsion.foxcalc import (
    TensorEvaluator, alexander_matrix, evaluate_word, expand_word,
    fox_derivative, fox_identity_defect)
from linktorsion.oracles import fox_derivative_recursive
from linktorsion.reps import Representation, search_reps, trivial_rep

ZZ = Ring("Z")


def free_evaluator(ring, n, images, component_of, num_vars):
    """Evaluator on free generators, no presentation needed."""
    rep = Representation(ring, n, images)
    return TensorEvaluator(rep, component_of, num_vars)


@pytest.fixture(scope="module")
def tref_ev():
    """Nonabelian SL(2,F5) evaluator on the trefoil presentation."""
    pres = wirtinger(orient_and_sign(braid_to_pd([1, 1, 1], 2)))
    rep = search_reps(pres, 2, GF(5), special_linear=True, nonabelian=True,
                      limit=1)[0]
    return pres, TensorEvaluator.for_presentation(pres, rep)


def two_var_trivial():
    return free_evaluator(ZZ, 1, [((1,),), ((1,),)], [0, 1], 2)


class TestExpandWord:
    def test_expansion(self):
        assert expand_word([(0, 2), (1, -3)], 2) == [
            (0, 1), (0, 1), (1, -1), (1, -1), (1, -1)]

    def test_errors(self):
        with pytest.raises(ValueError):
            expand_word([(2, 1)], 2)
        with pytest.raises(ValueError):
            expand_word([(0, 0)], 2)


class TestEvaluateWord:
    def test_empty_word(self):
        ev = two_var_trivial()
        assert evaluate_word(ev, []) == ev.identity()

    def test_two_variables(self):
        ev = two_var_trivial()
        got = evaluate_word(ev, [(0, 1), (1, 1)])
        assert render_poly(got.entries[0][0]) == "t1*t2"

    def test_inverse_law(self, tref_ev):
        pres, ev = tref_ev
        rng = random.Random(7)
        for _ in range(25):
            w = [(rng.randrange(3), rng.choice([-1, 1])) for _ in range(8)]
            winv = [(g, -e) for g, e in reversed(w)]
            assert evaluate_word(ev, w + winv) == ev.identity()

    def test_relators_evaluate_to_identity(self, tref_ev):
        pres, ev = tref_ev
        for r in pres.relators:
            assert evaluate_word(ev, r) == ev.identity()

    def test_bad_generator(self):
        ev = two_var_trivial()
        with pytest.raises(ValueError):
            evaluate_word(ev, [(5, 1)])


class TestFoxDerivative:
    def test_rule_generator(self):
        ev = two_var_trivial()
        assert fox_derivative(ev, [(0, 1)], 0) == ev.identity()
        assert fox_derivative(ev, [(1, 1)], 0) == ev.zero()

    def test_rule_inverse(self):
        ev = two_var_trivial()
        got = fox_derivative(ev, [(0, -1)], 0)
        assert render_poly(got.entries[0][0]) == "-t1^-1"

    def test_square(self):
        ev = two_var_trivial()
        got = fox_derivative(ev, [(0, 2)], 0)
        assert render_poly(got.entries[0][0]) == "t1 + 1"

    def test_exponent_expansion_matches_letters(self, tref_ev):
        _, ev = tref_ev
        a = fox_derivative(ev, [(0, 2), (1, -2)], 1)
        b = fox_derivative(ev, [(0, 1), (0, 1), (1, -1), (1, -1)], 1)
        assert a == b

    def test_trefoil_two_generator_relator(self):
        # <x, y | x y x y^-1 x^-1 y^-1>, both meridians of one knot
        ev = free_evaluator(ZZ, 1, [((1,),), ((1,),)], [0, 0], 1)
        word = [(0, 1), (1, 1), (0, 1), (1, -1), (0, -1), (1, -1)]
        got = fox_derivative(ev, word, 0)
        assert render_poly(got.entries[0][0]) == "t1^2 - t1 + 1"
        oracle = fox_derivative_recursive(ev, word, 0)
        assert got == oracle

    def test_fold_matches_recursion(self, tref_ev):
        pres, ev = tref_ev
        rng = random.Random(11)
        for _ in range(40):
            w = [(rng.randrange(3), rng.choice([-2, -1, 1, 2]))
                 for _ in range(rng.randint(0, 7))]
            j = rng.randrange(3)
            assert fox_derivative(ev, w, j) == fox_derivative_recursive(ev, w, j)

    def test_product_rule(self, tref_ev):
        pres, ev = tref_ev
        rng = random.Random(13)
        for _ in range(40):
            u = [(rng.randrange(3), rng.choice([-1, 1])) for _ in range(5)]
            v = [(rng.randrange(3), rng.choice([-1, 1])) for _ in range(5)]
            j = rng.randrange(3)
            whole = fox_derivative(ev, u + v, j)
            split = fox_derivative(ev, u, j) + evaluate_word(ev, u) * fox_derivative(ev, v, j)
            assert whole == split

    def test_fundamental_identity(self, tref_ev):
        pres, ev = tref_ev
        for r in pres.relators:
            assert fox_identity_defect(ev, r) == ev.zero()

    def test_bad_index(self):
        ev = two_var_trivial()
        with pytest.raises(ValueError):
            fox_derivative(ev, [(0, 1)], 9)


GOLDEN_TREFOIL = [
    ["-t1", "1", "t1 - 1"],
    ["1", "t1 - 1", "-t1"],
    ["t1 - 1", "-t1", "1"],
]
GOLDEN_HOPF = [
    ["-t2 + 1", "t1 - 1"],
    ["t2 - 1", "-t1 + 1"],
]


class TestAlexanderMatrix:
    def test_trefoil_golden(self):
        pres = wirtinger(orient_and_sign(braid_to_pd([1, 1, 1], 2)))
        ev = TensorEvaluator.for_presentation(pres, trivial_rep(pres, ZZ))
        am = alexander_matrix(pres, ev)
        got = [[render_poly(am.blocks[i][j].entries[0][0]) for j in range(3)]
               for i in range(3)]
        assert got == GOLDEN_TREFOIL

    def test_hopf_golden(self):
        pres = wirtinger(orient_and_sign(parse_pd("X[1,3,2,4] X[3,1,4,2]")))
        ev = TensorEvaluator.for_presentation(pres, trivial_rep(pres, ZZ))
        am = alexander_matrix(pres, ev)
        got = [[render_poly(am.blocks[i][j].entries[0][0]) for j in range(2)]
               for i in range(2)]
        assert got == GOLDEN_HOPF

    def test_unknot_no_relators(self):
        pres = wirtinger(orient_and_sign(parse_pd("")))
        ev = TensorEvaluator.for_presentation(pres, trivial_rep(pres, ZZ))
        am = alexander_matrix(pres, ev)
        assert am.relator_count == 0 and am.generator_count == 1
        with pytest.raises(ValueError):
            am.to_matrix()

    def test_block_flattening(self, tref_ev):
        pres, ev = tref_ev
        am = alexander_matrix(pres, ev)
        full = am.to_matrix()
        assert (full.nrows, full.ncols) == (6, 6)
        cut = am.to_matrix(drop_relator=2, delete_generator=0)
        assert (cut.nrows, cut.ncols) == (4, 4)
        # flattened entries come from the right blocks
        assert cut.entries[0][0] == am.blocks[0][1].entries[0][0]
        assert cut.entries[3][3] == am.blocks[1][2].entries[1][1]

    def test_to_matrix_validation(self, tref_ev):
        pres, ev = tref_ev
        am = alexander_matrix(pres, ev)
        with pytest.raises(ValueError):
            am.to_matrix(drop_relator=5)
        with pytest.raises(ValueError):
            am.to_matrix(delete_generator=-2)

    def test_mismatched_evaluator(self, tref_ev):
        pres, ev = tref_ev
        other = wirtinger(orient_and_sign(parse_pd("X[1,3,2,4] X[3,1,4,2]")))
        with pytest.raises(ValueError):
            alexander_matrix(other, ev)

    def test_identity_on_nontrivial_block_matrix(self, tref_ev):
        # row blocks of the full matrix annihilate the column (Phi(x_j)-I)
        pres, ev = tref_ev
        am = alexander_matrix(pres, ev)
        ident = ev.identity()
        for i in range(am.relator_count):
            acc = ev.zero()
            for j in range(am.generator_count):
                acc = acc + am.blocks[i][j] * (ev.phi(j) - ident)
            assert acc == ev.zero()
