"""Certified replay of symbolic rewriting scripts.

A script is data: a start expression, a list of steps ``(rule, position,
result)`` and a target.  Replaying checks each step against an oriented
rule set; nothing is searched.  Two built-in rules need no declaration:
``cancel`` deletes an adjacent inverse pair at the position and
``insert`` adds one.

``build_monoid_script`` produces scripts between positive words that are
equal in the monoid presented by commutation and braid relations.  It is
a generator of data, not part of the trust base: its output is replayed
like any other script.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .twistwords import TwistWord, as_twist_word, format_word, invert, parse_expression


class ReplayError(ValueError):
    pass


@dataclass(frozen=True)
class Rule:
    id: str
    lhs: TwistWord
    rhs: TwistWord


BUILTIN = ("cancel", "insert")


@dataclass(frozen=True)
class RuleSet:
    rules: Mapping = field(default_factory=dict)

    def __contains__(self, rid):
        return rid in BUILTIN or rid in self.rules

    def __getitem__(self, rid) -> Rule:
        return self.rules[rid]

    def __len__(self):
        return len(self.rules)

    def ids(self) -> list:
        return sorted(self.rules)

    def without(self, *ids) -> "RuleSet":
        return RuleSet({k: v for k, v in self.rules.items() if k not in ids})

    def merged(self, other: "RuleSet") -> "RuleSet":
        return RuleSet({**self.rules, **other.rules})

    def to_json(self) -> dict:
        return {r.id: {"lhs": format_word(r.lhs), "rhs": format_word(r.rhs)} for r in self.rules.values()}

    @classmethod
    def from_json(cls, data: Mapping) -> "RuleSet":
        return cls({k: Rule(k, parse_expression(v["lhs"], reduce=False), parse_expression(v["rhs"], reduce=False))
                    for k, v in data.items()})


def equation_rules(name: str, lhs, rhs, inverses: bool = False) -> RuleSet:
    """Oriented rules from one equation: ``name`` (lhs -> rhs), ``name~`` (back).

    With ``inverses`` also ``name'`` and ``name'~`` acting on inverted words.
    """
    L, R = as_twist_word(lhs), as_twist_word(rhs)
    out = {name: Rule(name, L, R), name + "~": Rule(name + "~", R, L)}
    if inverses:
        Li, Ri = invert(L), invert(R)
        out[name + "'"] = Rule(name + "'", Li, Ri)
        out[name + "'~"] = Rule(name + "'~", Ri, Li)
    return RuleSet(out)


def coxeter_rules(edges: Mapping[frozenset, int], symbols: Iterable[str]) -> RuleSet:
    """Commutation rules ``comm:a,b`` and braid rules ``braid:a,b`` (a b a -> b a b)."""
    syms = list(symbols)
    out = {}
    for i, a in enumerate(syms):
        for b in syms[i + 1:]:
            m = edges.get(frozenset((a, b)))
            for x, y in ((a, b), (b, a)):
                if m == 2:
                    rid = f"comm:{x},{y}"
                    out[rid] = Rule(rid, ((x, 1), (y, 1)), ((y, 1), (x, 1)))
                elif m == 3:
                    rid = f"braid:{x},{y}"
                    out[rid] = Rule(rid, ((x, 1), (y, 1), (x, 1)), ((y, 1), (x, 1), (y, 1)))
    return RuleSet(out)


@dataclass(frozen=True)
class Step:
    rule: str
    position: int
    result: TwistWord


@dataclass(frozen=True)
class RewriteScript:
    name: str
    start: TwistWord
    steps: tuple
    target: TwistWord
    rules: RuleSet
    milestones: tuple = ()   # (step index, label) pairs marking displayed lines
    description: str = ""

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "description": self.description,
            "start": format_word(self.start),
            "target": format_word(self.target),
            "rules": self.rules.to_json(),
            "milestones": [{"after_step": i, "label": lab} for i, lab in self.milestones],
            "steps": [{"rule": s.rule, "position": s.position, "result": format_word(s.result)}
                      for s in self.steps],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "RewriteScript":
        return cls(
            name=data["name"],
            start=parse_expression(data["start"], reduce=False),
            steps=tuple(Step(s["rule"], int(s["position"]), parse_expression(s["result"], reduce=False))
                        for s in data["steps"]),
            target=parse_expression(data["target"], reduce=False),
            rules=RuleSet.from_json(data.get("rules", {})),
            milestones=tuple((m["after_step"], m["label"]) for m in data.get("milestones", [])),
            description=data.get("description", ""),
        )


def save_script(script: RewriteScript, path) -> Path:
    path = Path(path)
    path.write_text(json.dumps(script.to_json(), indent=1, ensure_ascii=False) + "\n", encoding="utf-8")
    return path


def load_script(path) -> RewriteScript:
    return RewriteScript.from_json(json.loads(Path(path).read_text(encoding="utf-8")))


@dataclass(frozen=True)
class StepReport:
    index: int
    rule: str
    ok: bool
    message: str = ""


@dataclass(frozen=True)
class ReplayReport:
    name: str
    steps: tuple
    final: TwistWord
    final_matches: bool

    @property
    def verified(self) -> bool:
        return self.final_matches and all(s.ok for s in self.steps)

    @property
    def first_failure(self) -> StepReport | None:
        return next((s for s in self.steps if not s.ok), None)


def apply_rule(expr: Sequence[tuple], rule: Rule | str, position: int) -> TwistWord:
    """Apply one oriented rule (or a built-in) at ``position``."""
    expr = tuple(expr)
    if not 0 <= position <= len(expr):
        raise ReplayError(f"position {position} outside expression of length {len(expr)}")
    if rule == "cancel":
        pair = expr[position:position + 2]
        if len(pair) != 2 or pair[0][0] != pair[1][0] or pair[0][1] != -pair[1][1]:
            raise ReplayError(f"no inverse pair at position {position}")
        return expr[:position] + expr[position + 2:]
    if isinstance(rule, str):
        raise ReplayError(f"rule {rule!r} needs an explicit result")
    n = len(rule.lhs)
    if expr[position:position + n] != rule.lhs:
        raise ReplayError(f"rule {rule.id} does not match at position {position}")
    return expr[:position] + rule.rhs + expr[position + n:]


def _check_insert(cur: TwistWord, pos: int, res: TwistWord) -> bool:
    if len(res) != len(cur) + 2 or res[:pos] != cur[:pos] or res[pos + 2:] != cur[pos:]:
        return False
    a, b = res[pos], res[pos + 1]
    return a[0] == b[0] and a[1] == -b[1]


def replay_script(script: RewriteScript, rules: RuleSet | None = None, strict: bool = False) -> ReplayReport:
    """Re-check every step of a script against ``rules`` (default: its own)."""
    rules = script.rules if rules is None else rules
    cur = tuple(script.start)
    reports = []
    failed = False
    for k, st in enumerate(script.steps):
        if failed:
            reports.append(StepReport(k, st.rule, False, "not reached"))
            continue
        msg = ""
        if st.rule not in rules:
            msg = f"rule {st.rule!r} not in the declared rule set"
        elif not 0 <= st.position <= len(cur):
            msg = f"malformed position {st.position}"
        elif st.rule == "insert":
            if not _check_insert(cur, st.position, st.result):
                msg = "result is not an inverse-pair insertion"
        else:
            try:
                got = apply_rule(cur, "cancel" if st.rule == "cancel" else rules[st.rule], st.position)
                if got != st.result:
                    msg = f"result differs: expected {format_word(got)}"
            except ReplayError as e:
                msg = str(e)
        if msg:
            if strict:
                raise ReplayError(f"{script.name} step {k}: {msg}")
            failed = True
            reports.append(StepReport(k, st.rule, False, msg))
        else:
            reports.append(StepReport(k, st.rule, True))
            cur = st.result
    matches = not failed and cur == tuple(script.target)
    return ReplayReport(script.name, tuple(reports), cur, matches)


# -- script construction ----------------------------------------------------

class ScriptBuilder:
    """Accumulates steps while rewriting a working expression."""

    def __init__(self, start, rules: RuleSet):
        self.start = as_twist_word(start)
        self.word = list(self.start)
        self.rules = rules
        self.steps: list = []
        self.milestones: list = []

    @property
    def current(self) -> TwistWord:
        return tuple(self.word)

    def apply(self, rid: str, position: int):
        res = apply_rule(self.word, "cancel" if rid == "cancel" else self.rules[rid], position)
        self.word = list(res)
        self.steps.append(Step(rid, position, res))

    def insert(self, position: int, symbol: str, sign: int = 1):
        self.word[position:position] = [(symbol, sign), (symbol, -sign)]
        self.steps.append(Step("insert", position, tuple(self.word)))

    def cancel_all(self):
        i = 0
        while i + 1 < len(self.word):
            a, b = self.word[i], self.word[i + 1]
            if a[0] == b[0] and a[1] == -b[1]:
                self.apply("cancel", i)
                i = max(i - 1, 0)
            else:
                i += 1

    def mark(self, label: str, expect=None):
        if expect is not None and self.current != as_twist_word(expect):
            raise ReplayError(f"milestone {label!r} not reached: at {format_word(self.current)}")
        self.milestones.append((len(self.steps), label))

    def to_monoid_word(self, target, coxeter: Mapping[frozenset, int]):
        """Rewrite the current positive word into ``target`` with comm/braid rules."""
        tgt = as_twist_word(target)
        if len(tgt) != len(self.word):
            raise ReplayError("monoid rewriting preserves length")
        for i, (s, e) in enumerate(tgt):
            if e != 1:
                raise ReplayError("monoid rewriting needs positive words")
            self._bring(i, s, coxeter, 0)
        if self.current != tgt:
            raise ReplayError("target not reached")

    def _bring(self, i: int, s: str, coxeter, depth: int):
        # make word[i] == s using only letters at positions >= i
        if i >= len(self.word):
            raise ReplayError(f"{s} does not left-divide the suffix")
        t = self.word[i][0]
        if t == s:
            return
        m = coxeter.get(frozenset((s, t)))
        if m == 2:
            self._bring(i + 1, s, coxeter, depth + 1)
            self.apply(f"comm:{t},{s}", i)
        elif m == 3:
            self._bring(i + 1, s, coxeter, depth + 1)
            self._bring(i + 2, t, coxeter, depth + 1)
            self.apply(f"braid:{t},{s}", i)
        else:
            raise ReplayError(f"{s} does not left-divide the suffix starting with {t}")

    def build(self, name: str, target=None, description: str = "") -> RewriteScript:
        tgt = as_twist_word(target) if target is not None else self.current
        used = {st.rule for st in self.steps} - set(BUILTIN)
        return RewriteScript(name, self.start, tuple(self.steps), tgt,
                             RuleSet({k: self.rules[k] for k in sorted(used)}),
                             tuple(self.milestones), description)


def build_monoid_script(name: str, lines: Sequence, coxeter: Mapping[frozenset, int],
                        symbols: Iterable[str], labels: Sequence[str] | None = None) -> RewriteScript:
    """Script through the displayed ``lines`` (all equal positive words)."""
    rules = coxeter_rules(coxeter, symbols)
    b = ScriptBuilder(lines[0], rules)
    b.mark(labels[0] if labels else "line 0", lines[0])
    for k, line in enumerate(lines[1:], start=1):
        b.to_monoid_word(line, coxeter)
        b.mark(labels[k] if labels else f"line {k}", line)
    return b.build(name, lines[-1])
