"""Twist-word expressions.

A twist word is a tuple of ``(symbol, ±1)`` pairs, freely reduced.  The
text grammar accepts:

* symbols ``1a 1_a 2 c delta0 δ0 δ₀ \\delta_0 x1 psi``; digit curves may be
  run together, so ``43341a1b3`` reads ``4 3 3 4 1a 1b 3``;
* integer powers ``3^2``, ``(3 4)^6``, ``2^{-1}``, ``3⁻¹``;
* conjugates ``[x]^y`` meaning ``y x y^-1``, where the conjugator is a
  braced expression ``{...}`` or a single item with its own power;
* macros: names bound to previously defined expressions.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping, Sequence

TwistWord = tuple  # tuple[tuple[str, int], ...]


class ExpressionError(ValueError):
    pass


_SUPERSCRIPTS = str.maketrans({"⁻": "-", "¹": "1", "²": "2", "³": "3", "⁴": "4",
                                "⁵": "5", "⁶": "6", "⁰": "0", "ₐ": "a",
                                "₀": "0", "₁": "1", "₂": "2", "₃": "3", "₄": "4"})
_SUPER_RUN = re.compile(r"([⁻]?[⁰¹²³⁴⁵⁶]+)")

_SYMBOL = re.compile(
    r"\\?(?:delta|δ)_?(?:\{\d+\}|\d+)"  # boundary and delta curves
    r"|1_?(?:\{[ab]\}|[ab])"            # 1_a, 1_b
    r"|\d"                            # single-digit chain curves
    r"|ψ"
    r"|[A-Za-z]+(?:_?(?:\{\d+\}|\d+))?(?:_[A-Za-z0-9]+)?"
)


def normalize_symbol(tok: str) -> str:
    """Canonical spelling: ``1_a -> 1a``, ``δ_0 -> delta0``, ``ψ -> psi``."""
    t = tok.replace("\\", "").replace("{", "").replace("}", "")
    if t.startswith("δ"):
        t = "delta" + t[1:]
    if t == "ψ":
        return "psi"
    if re.fullmatch(r"delta_\d+|1_[ab]|[A-Za-z]+_\d+", t):
        t = t.replace("_", "")
    return t


def reduce_twist_word(letters: Iterable[tuple]) -> TwistWord:
    out: list = []
    for sym, e in letters:
        if e == 0:
            continue
        step = 1 if e > 0 else -1
        for _ in range(abs(e)):
            if out and out[-1] == (sym, -step):
                out.pop()
            else:
                out.append((sym, step))
    return tuple(out)


def invert(word: Sequence[tuple]) -> TwistWord:
    return tuple((s, -e) for s, e in reversed(word))


def power(word: Sequence[tuple], n: int) -> TwistWord:
    base = tuple(word) if n >= 0 else invert(word)
    return reduce_twist_word(base * abs(n))


def conjugate(x: Sequence[tuple], y: Sequence[tuple]) -> TwistWord:
    """``[x]^y = y x y^-1``."""
    return reduce_twist_word(tuple(y) + tuple(x) + invert(y))


def format_word(word: Sequence[tuple]) -> str:
    """Text form with runs collapsed (``3 3 -> 3^2``); parses back exactly."""
    parts = []
    for sym, e in word:
        if parts and parts[-1][0] == sym and (parts[-1][1] > 0) == (e > 0):
            parts[-1][1] += e
        else:
            parts.append([sym, e])
    return " ".join(s if e == 1 else f"{s}^{e}" for s, e in parts)


class _Parser:
    def __init__(self, text: str, macros: Mapping[str, TwistWord], reduce: bool = True):
        self.reduce = reduce
        text = _SUPER_RUN.sub(lambda m: "^" + m.group(1), text).translate(_SUPERSCRIPTS)
        self.s = text
        self.i = 0
        self.macros = macros

    def error(self, msg):
        raise ExpressionError(f"{msg} at position {self.i} in {self.s!r}")

    def skip(self):
        while self.i < len(self.s) and self.s[self.i] in " \t\n·*":
            self.i += 1

    def peek(self):
        self.skip()
        return self.s[self.i] if self.i < len(self.s) else ""

    def expect(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.i += 1

    def parse(self) -> TwistWord:
        w = self.expr()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return w

    def expr(self) -> TwistWord:
        out: list = []
        while self.peek() and self.peek() not in ")]}":
            out.extend(self.item())
        return reduce_twist_word(out) if self.reduce else tuple(out)

    def integer(self) -> int:
        self.skip()
        braced = self.peek() == "{"
        if braced:
            self.i += 1
            self.skip()
        m = re.compile(r"[+-]?\d+").match(self.s, self.i)
        if not m:
            self.error("expected integer exponent")
        self.i = m.end()
        if braced:
            self.expect("}")
        return int(m.group())

    def atom(self) -> TwistWord:
        ch = self.peek()
        if ch == "(":
            self.i += 1
            w = self.expr()
            self.expect(")")
            return w
        if ch == "{":
            self.i += 1
            w = self.expr()
            self.expect("}")
            return w
        m = _SYMBOL.match(self.s, self.i)
        if not m:
            self.error("expected a twist symbol")
        self.i = m.end()
        name = normalize_symbol(m.group())
        if name in self.macros:
            return tuple(self.macros[name])
        return ((name, 1),)

    def item(self) -> TwistWord:
        if self.peek() == "[":
            self.i += 1
            inner = self.expr()
            self.expect("]")
            if self.peek() != "^":
                return inner
            self.i += 1
            if self.peek() == "{":
                self.i += 1
                y = self.expr()
                self.expect("}")
            else:
                y = self.powered(self.atom())
            return conjugate(inner, y)
        return self.powered(self.atom())

    def powered(self, base: TwistWord) -> TwistWord:
        if self.peek() == "^":
            self.i += 1
            return power(base, self.integer())
        return base


def parse_expression(text: str, macros: Mapping[str, TwistWord] | None = None,
                     reduce: bool = True) -> TwistWord:
    """Parse conjugate/power notation into a flat twist word (freely reduced by default)."""
    if text.count("[") != text.count("]") or text.count("(") != text.count(")") \
            or text.count("{") != text.count("}"):
        raise ExpressionError(f"unbalanced brackets in {text!r}")
    return _Parser(text, macros or {}, reduce).parse()


def as_twist_word(word, macros: Mapping[str, TwistWord] | None = None) -> TwistWord:
    """Accept text, a sequence of symbols, or (symbol, exponent) pairs."""
    if isinstance(word, str):
        return parse_expression(word, macros)
    letters = []
    for item in word:
        if isinstance(item, str):
            letters.append((normalize_symbol(item), 1))
        else:
            s, e = item
            letters.append((normalize_symbol(s), int(e)))
    return reduce_twist_word(letters)
