"""Relation catalog, Hurwitz calculus, the BK factorization and the commutator check."""

import json
import shutil
from dataclasses import replace

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torusfib import homology as hom
from torusfib import relations as rel
from torusfib import rewrite as rw
from torusfib import surface as sf
from torusfib.twistwords import invert, parse_expression, reduce_twist_word
from torusfib.words import aut_equal


@pytest.fixture(scope="module")
def entries(ctx):
    return {e.name: e for e in rel.catalog(ctx)}


# -- catalog -------------------------------------------------------------------

def test_catalog_entries_all_verify(ctx, entries):
    assert len(entries) >= 9
    assert list(entries) == sorted(entries)
    for need in ("three-chain", "lift", "rel-2", "four-chain-capped", "baykur-korkmaz",
                 "genus3-commutator", "genus-g-commutator", "braid-2-3", "commute-2-4"):
        assert need in entries
    for e in entries.values():
        res = rel.verify_relation(e, ctx)
        assert res.verified, (e.name, res.trace)
        assert res.necessary_only == (res.mode == "homology")


def test_catalog_examples(ctx, entries):
    assert rel.verify_relation(entries["three-chain"], ctx).verified
    assert rel.verify_relation(entries["rel-2"], ctx).verified
    four = entries["four-chain-capped"]
    assert four.model == "sigma_2_1" and rel.verify_relation(four, ctx).verified
    bad = replace(entries["three-chain"], rhs="delta0")
    assert not rel.verify_relation(bad, ctx).verified


def test_catalog_roundtrip(tmp_path, ctx, entries):
    path = rel.save_catalog(list(entries.values()), tmp_path / "catalog.json")
    data = json.loads(path.read_text())
    again = [rel.RelationEntry.from_json(d) for d in data["relations"]]
    assert again == list(entries.values())
    for e in again:
        if e.mode != "homology":
            assert rel.verify_relation(e, ctx).verified


def test_genus_g_family_at_three(ctx, entries):
    fam = replace(entries["genus-g-commutator"], genus_range=(3, 3))
    res = rel.verify_relation(fam, ctx)
    assert res.verified and len(res.trace) == 1
    assert rel.commutator_presentation_check(ctx, genus=3).homology_ok


def test_pi1_entries_also_hold_in_homology(ctx, entries):
    for e in entries.values():
        if e.mode == "pi1":
            res = rel.verify_relation(e, ctx, mode="homology")
            assert res.verified and res.necessary_only


def test_mode_model_mismatch(ctx, entries):
    with pytest.raises(rel.RelationError):
        rel.verify_relation(entries["baykur-korkmaz-closed"], ctx, mode="pi1")
    with pytest.raises(rel.RelationError):
        rel.verify_relation(entries["lift"], ctx, mode="nonsense")


def test_replay_failure_is_diagnosed_by_pi1(tmp_path, ctx, entries):
    shutil.copytree(ctx.dir, tmp_path / "data")
    other = rel.Context(tmp_path / "data")
    path = other.dir / "scripts" / "rel2-expansion.json"
    script = rw.load_script(path)
    steps = list(script.steps)
    steps[3] = replace(steps[3], result=steps[3].result[::-1])
    rw.save_script(replace(script, steps=tuple(steps)), path)
    res = rel.verify_relation(entries["rel-2-expanded"], other)
    assert not res.verified
    assert any("transcription error" in t for t in res.trace)


def test_data_dir_resolution(tmp_path, monkeypatch):
    monkeypatch.delenv(rel.DATA_ENV, raising=False)
    monkeypatch.chdir(tmp_path)
    assert rel.data_dir() == sf.DATA_DIR
    monkeypatch.setenv(rel.DATA_ENV, str(tmp_path))
    assert rel.data_dir() == tmp_path
    assert rel.data_dir(sf.DATA_DIR) == sf.DATA_DIR


# -- conjugate notation vs evaluation ---------------------------------------------------

SYMS = ["1a", "1b", "2", "3", "4", "delta0", "delta1"]
signed = st.tuples(st.sampled_from(SYMS), st.sampled_from([1, -1]))


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(SYMS), st.lists(signed, max_size=6))
def test_conjugate_notation_matches_evaluation(model, x, y):
    y = reduce_twist_word(y)
    text = "[{}]^{{{}}}".format(x, " ".join(f"{s}^{e}" for s, e in y))
    lhs = sf.evaluate_mcg_word(model, rel.expand_conjugate_notation(text))
    ey = sf.evaluate_mcg_word(model, y)
    rhs = ey @ sf.evaluate_mcg_word(model, [(x, 1)]) @ sf.evaluate_mcg_word(model, invert(y))
    assert aut_equal(lhs, rhs)


# -- Hurwitz moves ---------------------------------------------------------------

def test_hurwitz_move_examples(model):
    f = rel.Factorization.from_symbols("2 3", "2 3")
    g = rel.hurwitz_move(f, 1, "forward", rel.Pi1Ambient(model))
    assert g.entries == (rel.FactorEntry("3", (("2", 1),)), rel.FactorEntry("2"))
    assert g.word() == parse_expression("2 3")
    assert str(g) == "[3]^{2} 2"
    assert rel.hurwitz_move(g, 1, "backward") == f
    for bad in (0, 2):
        with pytest.raises(rel.RelationError, match="out of range"):
            rel.hurwitz_move(f, bad)
    with pytest.raises(rel.RelationError):
        rel.Factorization.from_symbols("2 3^-1")


def test_cyclic_permute_examples(model):
    amb = rel.Pi1Ambient(model)
    f = rel.Factorization.from_symbols(f"delta0 delta1 {rel.REL2_RHS_EXPANDED}", "delta0^3 delta2")
    assert rel.verify_factorization(f, amb)
    g = rel.cyclic_permute(f, -2, amb)
    assert g.bases()[:3] == ["4", "3", "delta0"]
    assert rel.verify_factorization(g, amb)
    assert rel.cyclic_permute(f, len(f), amb) == f
    h = rel.Factorization.from_symbols("1a 2", "1a 2")
    with pytest.raises(rel.RelationError, match="commute"):
        rel.cyclic_permute(h, 1, amb)


def test_hurwitz_chain_replays(model):
    log = rel.hurwitz_chain(model)
    labels = [m[1] for m in log.milestones]
    assert labels == ["start", "cyclic permutation", "bracketed form"]
    assert rel.verify_factorization(log.current, rel.Pi1Ambient(model))
    assert sum(1 for s in log.steps if s[0] == "hurwitz") > 20
    # positivity: every entry is a conjugate of a positive twist
    assert all(isinstance(e, rel.FactorEntry) for e in log.current.entries)


@settings(settings.get_profile("property"))
@given(st.lists(st.sampled_from(rel.CHAIN_SYMBOLS + ("delta1", "c")), min_size=2, max_size=8),
       st.lists(st.tuples(st.integers(1, 7), st.booleans()), max_size=100))
def test_hurwitz_moves_preserve_product(model, symbols, moves):
    f = rel.Factorization.from_symbols(symbols, symbols)
    word = f.word()
    amb = rel.HomologyAmbient.of(model)
    for i, fwd in moves:
        if max(len(e.conj) for e in f.entries) > 64:
            break
        i = 1 + (i - 1) % (len(f) - 1)
        f = rel.hurwitz_move(f, i, "forward" if fwd else "backward")
    # exact equality in the free group on the twist symbols
    assert f.word() == word
    assert sorted(e.base for e in f.entries) == sorted(symbols)
    M = hom.identity(model.rank)
    for e in f.entries:
        M = hom.mat_mul(M, amb.value(e.word()))
    assert M == amb.value(word)


@settings(max_examples=150, deadline=None)
@given(st.lists(st.sampled_from(rel.CHAIN_SYMBOLS), min_size=2, max_size=5),
       st.lists(st.tuples(st.integers(1, 4), st.booleans()), max_size=6))
def test_hurwitz_moves_checked_in_pi1(model, symbols, moves):
    amb = rel.Pi1Ambient(model)
    f = rel.Factorization.from_symbols(symbols, symbols)
    for i, fwd in moves:
        i = 1 + (i - 1) % (len(f) - 1)
        f = rel.hurwitz_move(f, i, "forward" if fwd else "backward", amb)
    assert rel.verify_factorization(f, amb)


# -- the lifted relation and the genus-3 fibration ---------------------------------------

def test_baykur_korkmaz(model):
    res = rel.derive_baykur_korkmaz(model)
    assert res.verified
    assert (res.nonseparating, res.separating) == (4, 3)
    assert res.separating_pattern == (False,) * 4 + (True,) * 3
    assert [e.base for e in res.factorization.entries] == ["3", "2", "2", "2", "delta1", "delta1", "delta3"]


def test_baykur_korkmaz_closed_homology(closed):
    classes = rel.bk_classes(closed)
    amb = rel.HomologyAmbient.of(closed)
    f = rel.bk_factorization()
    assert amb.value(f.word()) == amb.value(parse_expression(rel.BK_TARGET))
    L = closed.lattice
    prod = hom.identity(L.rank)
    for name in rel.BK_WORD.split():
        prod = hom.mat_mul(prod, hom.transvection(L, classes[name]))
    assert prod == amb.value(parse_expression(rel.BK_TARGET))


def test_printed_assignment_and_negative_control_fail(model):
    assert not rel.derive_baykur_korkmaz(model, rel.BK_PRINTED).verified
    perturbed = {**rel.BK_DEFINITIONS, "y2": "delta3"}
    assert not rel.derive_baykur_korkmaz(model, perturbed).verified


def test_commutator_presentation(ctx):
    rep = rel.commutator_presentation_check(ctx)
    assert rep.verified
    assert rep.symbolic.verified and rep.homology_ok
    assert all(ok for _, ok in rep.precheck)
    assert rep.census == (4, 1)
    closed = ctx.closed_model(3)
    classes = rel.bk_classes(closed)
    W = rep.witness
    assert closed.lattice.is_symplectic(W)
    assert hom.mat_vec(W, list(closed.class_of("delta0"))) == list(classes["x1"])
    assert hom.mat_vec(W, list(classes["x2"])) == list(closed.class_of("delta2"))


def test_commutator_without_delta0_x2_rule_fails(ctx):
    script = rel.load_named_script(ctx, "commutator-genus3")
    rules = script.rules
    kept = rules.without(*[k for k in rules.ids() if k.startswith("comm-delta0-x2")])
    rep = rel.commutator_presentation_check(ctx, replace(script, rules=kept))
    assert not rep.symbolic.verified and not rep.verified
    assert rep.symbolic.first_failure.index == 3


def test_genus_g_family(ctx):
    for g in (3, 4, 6):
        rep = rel.commutator_presentation_check(ctx, genus=g)
        assert rep.homology_ok and rep.census == (4, 1)
