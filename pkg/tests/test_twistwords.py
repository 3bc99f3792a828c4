"""Twist-word expressions and conjugate notation."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torusfib.relations import expand_conjugate_notation
from torusfib.twistwords import (ExpressionError, as_twist_word, conjugate, format_word, invert,
                                 normalize_symbol, parse_expression, power, reduce_twist_word)


def w(text):
    return tuple((s, 1) if not s.startswith("-") else (s[1:], -1) for s in text.split())


def test_symbol_spellings():
    assert normalize_symbol("1_a") == "1a"
    assert normalize_symbol("δ_0") == "delta0"
    assert normalize_symbol("\\delta_2") == "delta2"
    assert normalize_symbol("ψ") == "psi"
    assert normalize_symbol("x_1") == "x1"
    assert parse_expression("1_a 1_b δ_0 \\delta_1 x_1 ψ") == w("1a 1b delta0 delta1 x1 psi")


def test_glued_digits_and_powers():
    assert parse_expression("43341a1b3") == w("4 3 3 4 1a 1b 3")
    assert parse_expression("(3 4)^3") == w("3 4 3 4 3 4")
    assert parse_expression("2^{-1} 3^2") == w("-2 3 3")
    assert parse_expression("δ₁⁻¹ 1ₐ") == w("-delta1 1a")
    assert parse_expression("3⁻¹") == w("-3")
    assert parse_expression("delta0^3") == w("delta0 delta0 delta0")


def test_conjugate_notation_examples():
    assert expand_conjugate_notation("[x]^{}") == w("x")
    assert expand_conjugate_notation("[2]^{4334}") == w("4 3 3 4 2 -4 -3 -3 -4")
    assert expand_conjugate_notation("[3]^{(2 1a 1b 2)^{-1}}") == w("-2 -1b -1a -2 3 2 1a 1b 2")
    # nested: [[x]^y]^z = [x]^{zy}
    assert expand_conjugate_notation("[[x]^y]^z") == expand_conjugate_notation("[x]^{z y}")
    # a single-item conjugator carries its own power
    assert expand_conjugate_notation("[x]^{y^2}") == expand_conjugate_notation("[x]^y^2")


def test_definitions_are_macros():
    defs = {"x2": "[2]^{4334}", "x3": "[2]^{43341a1b3}", "y": "[delta1]^{(x2 x3)^-1}"}
    got = expand_conjugate_notation("y", defs)
    x23 = parse_expression("[2]^{4334} [2]^{43341a1b3}")
    assert got == conjugate(w("delta1"), invert(x23))


def test_unbalanced_and_malformed():
    for bad in ("[2^{4334}", "(3 4", "[2]^{4 3", "3 ^", "2 % 3"):
        with pytest.raises(ExpressionError):
            parse_expression(bad)


def test_format_roundtrip_examples():
    word = w("3 3 -2 -2 4 1a -1a")
    red = reduce_twist_word(word)
    assert format_word(red) == "3^2 2^-2 4"
    assert parse_expression(format_word(red)) == red
    assert parse_expression("psi^-1 psi", reduce=False) == w("-psi psi")
    assert as_twist_word(["1_a", "2"]) == w("1a 2")


SYMS = ["1a", "1b", "2", "3", "4", "delta0", "x1", "psi"]
signed = st.tuples(st.sampled_from(SYMS), st.sampled_from([1, -1]))


@settings(max_examples=2000, deadline=None)
@given(st.lists(signed, max_size=40), st.lists(signed, max_size=8))
def test_parse_format_and_conjugation_laws(raw, conj):
    word = reduce_twist_word(raw)
    c = reduce_twist_word(conj)
    assert parse_expression(format_word(word)) == word
    assert parse_expression(format_word(word), reduce=False) == word
    assert reduce_twist_word(word + invert(word)) == ()
    assert power(word, -1) == invert(word)
    text = f"[{format_word(word) or '{}'}]^{{{format_word(c)}}}"
    assert parse_expression(text) == conjugate(word, c)
