import json

import pytest

from linktorsion.algebra import GF, Ring, mat_is_identity, mat_mul
from linktorsion.diagram import (
    WirtingerPresentation, braid_to_pd, delete_component, orient_and_sign,
    parse_pd, wirtinger)
from linktorsion.fixtures import get
from linktorsion.oracles import run_suite
from linktorsion.reps import (
    Representation, induce, is_nonabelian, load_rep, longitude_image,
    rep_from_json, rep_to_json, save_rep, search_reps, trivial_rep, validate)

ZZ, QQ, F5, F3 = Ring("Z"), Ring("Q"), GF(5), GF(3)


def trefoil_pres():
    return wirtinger(orient_and_sign(braid_to_pd([1, 1, 1], 2)))


def two_gen_trefoil():
    # <x, y | xyx = yxy> written as a cyclic word
    rel = [(0, 1), (1, 1), (0, 1), (1, -1), (0, -1), (1, -1)]
    return WirtingerPresentation(2, [rel], [0, 0], [0])


PARABOLIC = [((1, 1), (0, 1)), ((1, 0), (-1, 1))]


class TestValidate:
    def test_trivial_everywhere(self):
        from linktorsion.fixtures import CORPUS
        for f in CORPUS:
            pres = wirtinger(f.diagram())
            for ring in (ZZ, QQ, F5):
                assert validate(trivial_rep(pres, ring), pres) == []

    def test_parabolic_trefoil(self):
        pres = two_gen_trefoil()
        rep = Representation(F5, 2, PARABOLIC)
        assert validate(rep, pres) == []
        assert rep.is_special_linear
        assert is_nonabelian(rep)

    def test_broken_relator_reported(self):
        pres = two_gen_trefoil()
        rep = Representation(F5, 2, [((1, 1), (0, 1)), ((2, 2), (0, 2))])
        bad = validate(rep, pres)
        assert bad and any("relator" in b or "conjugate" in b for b in bad)

    def test_singular_image_reported(self):
        pres = two_gen_trefoil()
        rep = Representation(F5, 2, [((1, 1), (0, 1)), ((1, 1), (2, 2))])
        bad = validate(rep, pres)
        assert any("determinant" in b for b in bad)

    def test_size_mismatch(self):
        pres = trefoil_pres()
        rep = Representation(F5, 1, [((1,),)])
        with pytest.raises(ValueError):
            validate(rep, pres)

    def test_non_square_image(self):
        with pytest.raises(ValueError):
            Representation(F5, 2, [((1, 0),)])


class TestTrivialRep:
    def test_shape(self):
        pres = trefoil_pres()
        rep = trivial_rep(pres, QQ)
        assert rep.n == 1 and rep.num_generators == 3
        assert rep.is_special_linear
        assert not is_nonabelian(rep)

    def test_over_f2(self):
        pres = trefoil_pres()
        assert validate(trivial_rep(pres, GF(2)), pres) == []


class TestSearch:
    def test_gl2_f3_unknot_count(self):
        pres = wirtinger(orient_and_sign(parse_pd("")))
        found = search_reps(pres, 2, F3)
        assert len(found) == 48  # |GL(2,3)|

    def test_sl2_f3_unknot_count(self):
        pres = wirtinger(orient_and_sign(parse_pd("")))
        found = search_reps(pres, 2, F3, special_linear=True)
        assert len(found) == 24  # |SL(2,3)|

    def test_trefoil_nonabelian_sl2_f5(self):
        pres = trefoil_pres()
        found = search_reps(pres, 2, F5, special_linear=True, nonabelian=True,
                            limit=3)
        assert found
        for rep in found:
            assert validate(rep, pres) == []
            assert rep.is_special_linear and is_nonabelian(rep)

    def test_kill_component_forces_identity(self):
        d = get("hopf").diagram()
        pres = wirtinger(d)
        found = search_reps(pres, 2, F5, kill_component=1, limit=10)
        assert found
        for rep in found:
            for g in range(pres.num_generators):
                if pres.component_of[g] == 1:
                    assert mat_is_identity(F5, rep.images[g])

    def test_kill_all_components_only_trivial(self):
        pres = wirtinger(orient_and_sign(parse_pd("")))
        found = search_reps(pres, 2, F5, kill_component=0)
        assert len(found) == 1
        assert mat_is_identity(F5, found[0].images[0])

    def test_deterministic_order(self):
        pres = trefoil_pres()
        a = search_reps(pres, 2, F5, special_linear=True, limit=5)
        b = search_reps(pres, 2, F5, special_linear=True, limit=5)
        assert a == b

    def test_limit_is_prefix(self):
        pres = wirtinger(orient_and_sign(parse_pd("")))
        assert search_reps(pres, 2, F3, limit=7) == search_reps(pres, 2, F3)[:7]

    def test_parameter_validation(self):
        pres = trefoil_pres()
        with pytest.raises(ValueError):
            search_reps(pres, 4, F5)
        with pytest.raises(ValueError):
            search_reps(pres, 2, ZZ)
        with pytest.raises(ValueError):
            search_reps(pres, 2, F5, kill_component=9)


class TestInduce:
    def test_hopf_trivial(self):
        d = get("hopf").diagram()
        deletion = delete_component(d, 1)
        sub_pres = wirtinger(deletion.sub_diagram)
        pair = induce(wirtinger(d), deletion, trivial_rep(sub_pres, QQ))
        assert validate(pair.rho_L, wirtinger(d)) == []

    def test_killed_component_maps_to_identity(self):
        from linktorsion.fixtures import CORPUS
        for f in CORPUS:
            d = f.diagram()
            pres = wirtinger(d)
            for comp in range(d.num_components):
                deletion = delete_component(d, comp)
                sub_pres = wirtinger(deletion.sub_diagram)
                reps = search_reps(sub_pres, 2, F5, limit=1)
                assert reps, f.name
                pair = induce(pres, deletion, reps[0])
                for g in range(pres.num_generators):
                    if pres.component_of[g] == comp:
                        assert mat_is_identity(F5, pair.rho_L.images[g])
                    else:
                        expect = reps[0].images[deletion.arc_map[g]]
                        assert pair.rho_L.images[g] == expect

    def test_split_trefoil_circle(self):
        d = get("trefoil_circle").diagram()
        deletion = delete_component(d, 1)
        sub_pres = wirtinger(deletion.sub_diagram)
        rep = search_reps(sub_pres, 2, F5, special_linear=True,
                          nonabelian=True, limit=1)[0]
        pair = induce(wirtinger(d), deletion, rep)
        assert validate(pair.rho_L, wirtinger(d)) == []
        circle_gen = [g for g in range(4)
                      if wirtinger(d).component_of[g] == 1]
        assert len(circle_gen) == 1
        assert mat_is_identity(F5, pair.rho_L.images[circle_gen[0]])

    def test_invalid_sublink_rep_rejected(self):
        d = get("hopf").diagram()
        deletion = delete_component(d, 1)
        bad = Representation(F5, 2, [((1, 1), (1, 1))])  # singular
        with pytest.raises(ValueError):
            induce(wirtinger(d), deletion, bad)


class TestLongitudeImage:
    def test_trivial_rep_gives_identity(self):
        d = get("hopf").diagram()
        deletion = delete_component(d, 1)
        sub_pres = wirtinger(deletion.sub_diagram)
        pair = induce(wirtinger(d), deletion, trivial_rep(sub_pres, QQ))
        assert longitude_image(pair, d, 1) == ((QQ.one,),)

    def test_framing_and_start_arc_invariance(self):
        # the longitude image never sees framing letters (they map to I)
        d = get("borromean").diagram()
        deletion = delete_component(d, 2)
        sub_pres = wirtinger(deletion.sub_diagram)
        rep = search_reps(sub_pres, 2, F5, special_linear=True,
                          nonabelian=True, limit=1)[0]
        pair = induce(wirtinger(d), deletion, rep)
        img = longitude_image(pair, d, 2)
        assert not mat_is_identity(F5, img)  # nontrivial witness

    def test_basepoint_conjugates_image(self):
        # start-arc choices conjugate the image; trace and det cannot move
        from linktorsion.algebra import mat_det, mat_inv
        from linktorsion.diagram import longitude_word

        d = get("borromean").diagram()
        deletion = delete_component(d, 2)
        sub_pres = wirtinger(deletion.sub_diagram)
        rep = search_reps(sub_pres, 2, F5, special_linear=True,
                          nonabelian=True, limit=1)[0]
        pair = induce(wirtinger(d), deletion, rep)
        base = longitude_image(pair, d, 2)
        trace = lambda m: F5.add(m[0][0], m[1][1])
        for a in [x for x in range(d.num_arcs) if d.arc_component[x] == 2]:
            m = ((1, 0), (0, 1))
            for g, e in longitude_word(d, 2, start_arc=a):
                img = pair.rho_L.images[g]
                m = mat_mul(F5, m, img if e > 0 else mat_inv(F5, img))
            assert trace(m) == trace(base)
            assert mat_det(F5, m) == mat_det(F5, base)


class TestRepFiles:
    def test_roundtrip_f5(self):
        pres = two_gen_trefoil()
        rep = Representation(F5, 2, PARABOLIC)
        obj = rep_to_json(rep)
        assert obj["ring"] == "F5" and obj["p"] == 5 and obj["n"] == 2
        back = rep_from_json(json.loads(json.dumps(obj)))
        assert back == rep

    def test_roundtrip_q(self, tmp_path):
        pres = trefoil_pres()
        rep = trivial_rep(pres, QQ)
        path = tmp_path / "rep.json"
        save_rep(path, rep)
        assert load_rep(path) == rep

    def test_rational_entries_are_pairs(self):
        from fractions import Fraction
        rep = Representation(QQ, 1, [((Fraction(1, 2),),)])
        obj = rep_to_json(rep)
        assert obj["images"]["0"] == [[[1, 2]]]
        assert rep_from_json(obj) == rep

    def test_errors(self, tmp_path):
        with pytest.raises(ValueError):
            rep_from_json({"ring": "F5", "n": 2})
        with pytest.raises(ValueError):
            rep_from_json({"ring": "X9", "n": 1, "images": {"0": [[1]]}})
        with pytest.raises(ValueError):
            rep_from_json({"ring": "Z", "n": 1, "images": {"0": [[1]], "2": [[1]]}})
        with pytest.raises(ValueError):
            rep_from_json({"ring": "Z", "n": 2, "images": {"0": [[1, 0]]}})
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        with pytest.raises(ValueError):
            load_rep(bad)


class TestOracleSuites:
    def test_all_suites_pass(self):
        for res in run_suite("all"):
            assert res.passed, res.summary()

    def test_unknown_suite(self):
        with pytest.raises(ValueError):
            run_suite("nope")
