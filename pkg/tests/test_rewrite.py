"""Certified replay of rewriting scripts."""

from dataclasses import replace

import pytest

from torusfib import relations as rel
from torusfib import rewrite as rw
from torusfib.twistwords import parse_expression


def braid_rules():
    return rw.coxeter_rules(rel.chain_coxeter(), rel.CHAIN_SYMBOLS)


def test_one_step_braid_replay():
    rules = braid_rules()
    start = parse_expression("3 4 3")
    script = rw.RewriteScript("braid", start, (rw.Step("braid:3,4", 0, parse_expression("4 3 4")),),
                              parse_expression("4 3 4"), rules)
    rep = rw.replay_script(script)
    assert rep.verified
    assert [s.ok for s in rep.steps] == [True]


def test_rule_ids_cover_the_chain_pattern():
    rules = braid_rules()
    assert "braid:2,3" in rules and "braid:3,2" in rules
    assert "comm:2,4" in rules and "comm:1a,1b" in rules
    assert "braid:1a,1b" not in rules and "comm:2,3" not in rules


def test_shipped_lift_expansion_replays(ctx):
    script = rel.load_named_script(ctx, "lift-expansion")
    rep = rw.replay_script(script)
    assert rep.verified
    assert script.start == parse_expression("(1a 2 3 4 1b 2 3 4)^5")
    assert script.target == parse_expression(
        "(1a 1b)^2 (2 1a 1b 2)^2 (3 2 1a 1b 2 3)^2 (4 3 2 1a 1b 2 3 4)^2")
    assert len(script.milestones) == 7
    assert set(script.rules.ids()) <= set(braid_rules().ids())


def test_corrupted_step_reports_its_index(ctx):
    script = rel.load_named_script(ctx, "lift-expansion")
    k = 17
    bad = list(script.steps)
    bad[k] = replace(bad[k], result=bad[k].result[::-1])
    rep = rw.replay_script(replace(script, steps=tuple(bad)))
    assert not rep.verified
    assert rep.first_failure.index == k
    assert all(s.ok for s in rep.steps[:k])
    assert all(s.message == "not reached" for s in rep.steps[k + 1:])
    with pytest.raises(rw.ReplayError, match=f"step {k}"):
        rw.replay_script(replace(script, steps=tuple(bad)), strict=True)


def test_unknown_rule_and_bad_position():
    rules = braid_rules()
    start = parse_expression("3 4 3")
    s1 = rw.RewriteScript("x", start, (rw.Step("braid:9,9", 0, start),), start, rules)
    assert "not in the declared rule set" in rw.replay_script(s1).first_failure.message
    s2 = rw.RewriteScript("x", start, (rw.Step("braid:3,4", 7, start),), start, rules)
    assert "malformed position" in rw.replay_script(s2).first_failure.message
    s3 = rw.RewriteScript("x", start, (rw.Step("braid:3,4", 1, start),), start, rules)
    assert not rw.replay_script(s3).verified


def test_final_expression_must_match_target():
    rules = braid_rules()
    start = parse_expression("3 4 3")
    s = rw.RewriteScript("x", start, (rw.Step("braid:3,4", 0, parse_expression("4 3 4")),),
                         parse_expression("3 4 3"), rules)
    rep = rw.replay_script(s)
    assert all(st.ok for st in rep.steps) and not rep.verified


def test_builtins_insert_and_cancel():
    rules = rw.RuleSet()
    b = rw.ScriptBuilder("3 4", rules)
    b.insert(1, "psi", -1)
    assert b.current == parse_expression("3 psi^-1 psi 4", reduce=False)
    b.cancel_all()
    s = b.build("ins")
    assert rw.replay_script(s).verified
    forged = replace(s, steps=(rw.Step("insert", 1, parse_expression("3 psi psi 4", reduce=False)),) + s.steps[1:])
    assert not rw.replay_script(forged).verified


def test_json_roundtrip(tmp_path, ctx):
    for name in ("lift-expansion", "rel2-expansion", "commutator-genus3"):
        script = rel.load_named_script(ctx, name)
        path = rw.save_script(script, tmp_path / f"{name}.json")
        again = rw.load_script(path)
        assert again == script
        assert rw.replay_script(again).verified


def test_monoid_builder_rejects_unequal_words():
    b = rw.ScriptBuilder("3 4", braid_rules())
    with pytest.raises(rw.ReplayError):
        b.to_monoid_word("4 3", rel.chain_coxeter())
    with pytest.raises(rw.ReplayError):
        b.to_monoid_word("3 4 3", rel.chain_coxeter())
