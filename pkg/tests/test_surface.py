"""The two-boundary genus-2 curve system, twist actions and capping."""

import copy
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torusfib import homology as hom
from torusfib import surface as sf
from torusfib.words import FreeGroupAut, aut_equal, conjugate_equal, invert_word

REL = "(delta0^2 delta1^-1 delta2)^-1 (3 2 1a 1b 2 3)^2 (4 3 2 1a 1b 2 3 4)^2"
S, T = "(3 2 1a 1b 2 3)", "(4 3 2 1a 1b 2 3 4)"


@pytest.fixture(scope="module")
def doc():
    return json.loads((sf.DATA_DIR / "sigma_2_2.json").read_text())


# -- loading -----------------------------------------------------------------

def test_shipped_model_loads(model):
    assert model.genus == 2 and len(model.boundaries) == 2
    assert model.rank == 5 == 2 * model.genus + len(model.boundaries) - 1
    assert set(model.curves) == {"1a", "1b", "2", "3", "4", "c", "d", "delta0", "delta1", "delta2", "delta3"}
    assert set(model.arcs) == {"alpha", "beta"}
    for name, curve in model.curves.items():
        assert list(curve.h1) == hom.to_int_matrix([sf.abelianize(curve.word, model.full_rank)[:model.rank]])[0]


def test_document_roundtrip(model):
    again = sf.load_curve_system(sf.to_document(model))
    assert sf.to_document(again) == sf.to_document(model)
    assert sf.validate_twist_tables(again).passed


def _expect_check(document, check):
    with pytest.raises(sf.CurveSystemError) as e:
        sf.load_curve_system(document)
    assert e.value.check == check


def test_non_skew_form_rejected(doc):
    d = copy.deepcopy(doc)
    d["intersection_form"][0][3] = 1
    _expect_check(d, "intersection-form")


def test_missing_inverse_rejected(doc):
    d = copy.deepcopy(doc)
    for t in d["twists"]:
        if t["curve"] == "3":
            del t["inverse_images"]
    _expect_check(d, "missing-inverse")


def test_other_structural_errors(doc):
    d = copy.deepcopy(doc)
    d["curves"][0]["h1"] = [9, 9, 9, 9, 9]
    _expect_check(d, "curve-h1")
    d = copy.deepcopy(doc)
    d["arcs"][0]["word"] = "z al"
    _expect_check(d, "arc-connector")
    d = copy.deepcopy(doc)
    d["pi1"]["generators"] = d["pi1"]["generators"][:4]
    _expect_check(d, "rank")
    _expect_check("{not json", "parse")
    d = copy.deepcopy(doc)
    d["twists"] = [t for t in d["twists"] if t["curve"] != "c"]
    _expect_check(d, "missing-twist")


# -- validation ----------------------------------------------------------------

def test_twist_tables_validate(model):
    rep = sf.validate_twist_tables(model)
    assert rep.passed, [c.name for c in rep.failures]
    names = {c.name for c in rep}
    assert "commute:2,4" in names and "braid:2,3" in names
    assert "fixes-own-curve:3" in names and "transvection:1b" in names


def test_corrupted_table_reports_transvection_mismatch(doc):
    d = copy.deepcopy(doc)
    for t in d["twists"]:
        if t["curve"] == "1b":
            t["images"]["u2"] = t["images"]["u2"] + " u2"
            t["inverse_images"]["u2"] = t["inverse_images"]["u2"] + " u2"
    rep = sf.validate_twist_tables(sf.load_curve_system(d))
    assert not rep.passed
    assert "transvection:1b" in {c.name for c in rep.failures}


# -- evaluation ----------------------------------------------------------------

def test_evaluate_examples(model):
    assert aut_equal(sf.evaluate_mcg_word(model, ""), FreeGroupAut.identity(model.full_rank))
    assert sf.same_mapping_class(model, "(1a 2 3 4 1b 2 3 4)^5", "delta0^3 delta2")
    with pytest.raises(sf.UnknownSymbolError):
        sf.evaluate_mcg_word(model, "1a 7")


def test_is_identity_examples(model):
    assert sf.is_identity(model, REL)
    assert not sf.is_identity(model, "1a")
    assert sf.is_identity(model, "2 4 2^-1 4^-1")


def test_curve_bullets(model):
    # boundary curves
    for b in ("delta0", "delta2"):
        assert sf.fixed_up_to_isotopy(model, REL, b) == sf.FIXED_ORIENTED
    # c and d
    for x in ("c", "d"):
        assert sf.fixed_up_to_isotopy(model, f"{T}^2", x) == sf.FIXED_ORIENTED
        assert sf.fixed_up_to_isotopy(model, S, x) == sf.FIXED_ORIENTED
    # 1a, 1b, 2 keep their orientation; 4 is reversed
    for x in ("1a", "1b", "2"):
        assert sf.fixed_up_to_isotopy(model, f"{S} {T}", x) == sf.FIXED_ORIENTED
    assert sf.fixed_up_to_isotopy(model, f"{S} {T}", "4") == sf.FIXED_UNORIENTED
    # 3: reversed by T, and moved to delta1^-1(3) by S'^2
    assert sf.fixed_up_to_isotopy(model, T, "3") == sf.FIXED_UNORIENTED
    img = sf.image_of_curve(model, "(3 2 1b 1a 2 3)^2", "3")
    assert conjugate_equal(img, sf.image_of_curve(model, "delta1^-1", "3"))
    # arcs under the full word, and the slide description
    for arc in ("alpha", "beta"):
        assert sf.arc_fixed(model, REL, arc).strict
        phi = sf.evaluate_mcg_word(model, f"{S}^2 {T}^2")
        psi = sf.evaluate_mcg_word(model, "delta0^2 delta1^-1 delta2")
        assert phi(model.arc(arc).word) == psi(model.arc(arc).word)
    for name in model.curves:
        assert sf.fixed_up_to_isotopy(model, REL, name) == sf.FIXED_ORIENTED


def test_image_and_fixedness_examples(model):
    for name, curve in model.curves.items():
        assert conjugate_equal(sf.image_of_curve(model, "", name), curve.word)
        assert sf.fixed_up_to_isotopy(model, name, name) == sf.FIXED_ORIENTED
    assert conjugate_equal(sf.image_of_curve(model, f"{T}^2", "c"), model.curve("c").word)
    assert sf.fixed_up_to_isotopy(model, "1a", "2") == sf.MOVED
    with pytest.raises(sf.UnknownSymbolError):
        sf.image_of_curve(model, "", "nope")


def test_arc_examples(model):
    v = sf.arc_fixed(model, "delta0", "alpha")
    assert v and not v.strict and v.slides == (1, 0)
    assert sf.arc_fixed(model, "delta2", "beta").slides == (0, -1)
    assert not sf.arc_fixed(model, "delta1", "alpha")
    assert not sf.arc_fixed(model, "1a", "alpha")
    # in this transcription alpha crosses only 1a, c and delta1
    crossing = {t for t in model.twists if not sf.arc_fixed(model, t, "alpha")}
    assert crossing == {"1a", "c", "delta1"}
    with pytest.raises(sf.UnknownSymbolError):
        sf.arc_fixed(model, "", "gamma")


def test_separating_examples(model):
    assert sf.is_separating(model, "delta1")
    assert sf.is_separating(model, "delta3")
    assert not sf.is_separating(model, "1a")
    assert not sf.is_separating(model, "3")


# -- capping -----------------------------------------------------------------

def test_cap_delta0_gives_four_chain(capped, model):
    assert capped.rank == 4
    assert sf.validate_twist_tables(capped).passed
    assert sf.same_mapping_class(capped, "(1a 2 3 4)^10", "delta2")
    assert sf.same_mapping_class(capped, "(1b 2 3 4)^10", "delta2")
    assert sf.is_identity(capped, "delta0")
    fresh = sf.cap_disk(model, "delta0")
    assert sf.to_document(fresh) == sf.to_document(capped)


def test_cap_errors(capped):
    with pytest.raises(sf.CapError):
        sf.cap_disk(capped, "delta2")


def test_cap_preserves_relations(model, capped):
    for lhs, rhs in (("(1a 2 1b)^4", "delta0 delta1"), ("(3 4)^6", "delta3"),
                     (f"{S}^2 {T}^2", "delta0^2 delta1^-1 delta2")):
        assert sf.same_mapping_class(model, lhs, rhs)
        drop = lambda w: " ".join(t for t in w.split() if "delta0" not in t)
        assert sf.same_mapping_class(capped, drop(lhs), drop(rhs))


def test_cylinder_capping_lattice(closed):
    assert closed.genus == 3 and closed.lattice.rank == 6
    assert closed.lattice.is_unimodular()
    # delta1 separates delta0 from delta2, so joining them makes it nonseparating
    assert closed.separating["delta3"] and not closed.separating["delta1"]
    assert closed.class_of("delta0") == closed.class_of("delta2") or \
        closed.class_of("delta0") == tuple(-x for x in closed.class_of("delta2"))


# -- properties ----------------------------------------------------------------

TWISTS = ["1a", "1b", "2", "3", "4", "c", "d", "delta0", "delta1", "delta2", "delta3"]
twist_word = st.lists(st.tuples(st.sampled_from(TWISTS), st.sampled_from([1, -1])), max_size=7)


@settings(max_examples=600, deadline=None)
@given(twist_word)
def test_inverse_word_and_abelianization(model, word):
    phi = sf.evaluate_mcg_word(model, word)
    inv = sf.evaluate_mcg_word(model, [(s, -e) for s, e in reversed(word)])
    assert aut_equal(phi @ inv, FreeGroupAut.identity(model.full_rank))
    block = [row[:model.rank] for row in phi.abelianization()[:model.rank]]
    assert block == sf.homology_rep(model, word)


@settings(max_examples=300, deadline=None)
@given(twist_word, st.sampled_from(TWISTS))
def test_identity_words_fix_everything(model, word, curve):
    w = list(word) + [(s, -e) for s, e in reversed(word)]
    w = w[len(w) // 3:] + w[:len(w) // 3]   # a conjugate of the identity word
    assert sf.is_identity(model, w)
    assert sf.fixed_up_to_isotopy(model, w, curve) == sf.FIXED_ORIENTED
    assert all(sf.arc_fixed(model, w, a).strict for a in model.arcs)
    assert conjugate_equal(sf.image_of_curve(model, [(curve, 1)], curve), model.curve(curve).word)
    assert conjugate_equal(invert_word(model.curve(curve).word),
                           sf.image_of_curve(model, w, curve), unoriented=True)
