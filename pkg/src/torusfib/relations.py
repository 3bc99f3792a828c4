"""Relation catalog, Hurwitz calculus and the genus-3 commutator check.

Three verification modes:

* ``pi1``: both sides evaluated as automorphisms of the bounded model;
  decisive.
* ``homology``: both sides evaluated as products of transvections;
  a necessary condition only, used for closed surfaces.
* ``replay``: a shipped rewriting script is re-checked step by step.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Mapping, Sequence

from . import homology as hom
from . import rewrite as rw
from . import surface as sf
from .twistwords import (TwistWord, as_twist_word, conjugate, format_word, invert,
                         parse_expression, reduce_twist_word)
from .words import aut_equal

DATA_ENV = "TORUSFIB_DATA"


class RelationError(ValueError):
    pass


# -- data location -----------------------------------------------------------

def data_dir(explicit: str | Path | None = None) -> Path:
    """Explicit path, else $TORUSFIB_DATA, else ./data if it holds a model, else shipped data."""
    if explicit:
        return Path(explicit)
    env = os.environ.get(DATA_ENV)
    if env:
        return Path(env)
    local = Path.cwd() / "data"
    if (local / "sigma_2_2.json").is_file():
        return local
    return sf.DATA_DIR


class Context:
    """Loads and caches the ambient models of one data directory."""

    def __init__(self, directory: str | Path | None = None):
        self.dir = data_dir(directory)
        self._cache: dict = {}

    def model(self, name: str):
        if name not in self._cache:
            path = self.dir / f"{name}.json"
            if name.startswith("sigma_g_"):
                raise RelationError("genus-g models are built by stabilization, not loaded")
            doc = json.loads(path.read_text(encoding="utf-8"))
            self._cache[name] = (sf.load_homology_model(doc) if doc.get("kind") == "homology"
                                 else sf.load_curve_system(doc))
        return self._cache[name]

    def closed_model(self, genus: int) -> sf.HomologyModel:
        base = self.model("sigma_3_0")
        if genus < base.genus:
            raise RelationError(f"genus {genus} is below the base closed model")
        return sf.stabilize(base, genus - base.genus)


# -- ambient evaluation ------------------------------------------------------

class Pi1Ambient:
    mode = "pi1"

    def __init__(self, model: sf.SurfaceModel):
        self.model = model

    def value(self, word):
        return sf.evaluate_mcg_word(self.model, word)

    def same(self, a, b) -> bool:
        return aut_equal(a, b)

    def symbols(self):
        return set(self.model.twists)


class HomologyAmbient:
    mode = "homology"

    def __init__(self, lattice: hom.H1Lattice, classes: Mapping, extra: Mapping | None = None):
        self.lattice = lattice
        self.classes = dict(classes)
        self.extra = dict(extra or {})   # formal symbols with explicit matrices

    @classmethod
    def of(cls, model, extra=None):
        if isinstance(model, sf.SurfaceModel):
            return cls(model.lattice, {n: c.h1 for n, c in model.curves.items()}, extra)
        return cls(model.lattice, model.classes, extra)

    def value(self, word):
        M = hom.identity(self.lattice.rank)
        for sym, e in as_twist_word(word):
            if sym in self.extra:
                X = self.extra[sym]
                M = hom.mat_mul(M, X if e > 0 else hom.to_int_matrix(hom.inverse(X)))
            elif sym in self.classes:
                M = hom.mat_mul(M, hom.transvection(self.lattice, self.classes[sym], e))
            else:
                raise sf.UnknownSymbolError(sym)
        return M

    def same(self, a, b) -> bool:
        return a == b

    def symbols(self):
        return set(self.classes) | set(self.extra)


def ambient_for(model, mode: str = "pi1"):
    if mode == "pi1":
        if not isinstance(model, sf.SurfaceModel):
            raise RelationError("pi1 mode needs a bounded-surface model")
        return Pi1Ambient(model)
    if mode == "homology":
        return HomologyAmbient.of(model)
    raise RelationError(f"no evaluation ambient for mode {mode!r}")


# -- conjugate notation ------------------------------------------------------

def expand_conjugate_notation(expression: str, definitions: Mapping[str, str] | None = None) -> TwistWord:
    """Flatten ``[x]^y`` notation (with optional named definitions) to a twist word."""
    macros: dict = {}
    for name, text in (definitions or {}).items():
        macros[name] = parse_expression(text, macros)
    return parse_expression(expression, macros)


# -- factorizations ----------------------------------------------------------

@dataclass(frozen=True)
class FactorEntry:
    """The twist ``C base C^-1`` stored as (base, C)."""

    base: str
    conj: TwistWord = ()

    def word(self) -> TwistWord:
        return conjugate(((self.base, 1),), self.conj)

    def __str__(self):
        if not self.conj:
            return self.base
        c = format_word(self.conj)
        return f"[{self.base}]^{{{c}}}"


@dataclass(frozen=True)
class Factorization:
    entries: tuple
    target: TwistWord = ()

    @classmethod
    def from_symbols(cls, symbols, target=()) -> "Factorization":
        tw = as_twist_word(symbols)
        if any(e != 1 for _, e in tw):
            raise RelationError("factorization entries must be positive twists")
        return cls(tuple(FactorEntry(s) for s, _ in tw), as_twist_word(target))

    def __len__(self):
        return len(self.entries)

    def word(self) -> TwistWord:
        out: list = []
        for e in self.entries:
            out.extend(e.word())
        return reduce_twist_word(out)

    def bases(self) -> list:
        return [e.base for e in self.entries]

    def __str__(self):
        return " ".join(str(e) for e in self.entries)

    def to_json(self) -> dict:
        return {"entries": [{"base": e.base, "conj": format_word(e.conj)} for e in self.entries],
                "target": format_word(self.target)}

    @classmethod
    def from_json(cls, data) -> "Factorization":
        return cls(tuple(FactorEntry(e["base"], parse_expression(e["conj"])) for e in data["entries"]),
                   parse_expression(data["target"]))


def verify_factorization(f: Factorization, ambient) -> bool:
    return ambient.same(ambient.value(f.word()), ambient.value(f.target))


def hurwitz_move(f: Factorization, i: int, direction: str = "forward", ambient=None) -> Factorization:
    """Elementary transformation at entries i, i+1 (1-based).

    forward:  (a, b) -> (a b a^-1, a);  backward: (a, b) -> (b, b^-1 a b).
    """
    if not 1 <= i < len(f):
        raise RelationError(f"Hurwitz index {i} out of range for length {len(f)}")
    a, b = f.entries[i - 1], f.entries[i]
    if direction == "forward":
        new = (FactorEntry(b.base, reduce_twist_word(a.word() + b.conj)), a)
    elif direction == "backward":
        new = (b, FactorEntry(a.base, reduce_twist_word(invert(b.word()) + a.conj)))
    else:
        raise RelationError(f"unknown direction {direction!r}")
    g = replace(f, entries=f.entries[: i - 1] + new + f.entries[i + 1:])
    if ambient is not None:
        before = ambient.value(a.word() + b.word())
        after = ambient.value(new[0].word() + new[1].word())
        if not ambient.same(before, after):
            raise RelationError("Hurwitz move changed the product")
    return g


def cyclic_permute(f: Factorization, j: int, ambient) -> Factorization:
    """Rotate: j > 0 moves the first j entries to the end, j < 0 the last |j| to the front.

    The block that travels must commute with the target.
    """
    n = len(f)
    if n == 0 or j % n == 0:
        return f
    if abs(j) > n:
        j = j % n if j > 0 else -((-j) % n)
    block = f.entries[:j] if j > 0 else f.entries[j:]
    bw: list = []
    for e in block:
        bw.extend(e.word())
    comp = ambient.value(reduce_twist_word(tuple(bw) + tuple(f.target)))
    comp2 = ambient.value(reduce_twist_word(tuple(f.target) + tuple(bw)))
    if not ambient.same(comp, comp2):
        raise RelationError("rotated block does not commute with the target")
    return replace(f, entries=f.entries[j:] + f.entries[:j])


def simplify_entries(f: Factorization, ambient, candidates: Sequence[str] | None = None) -> Factorization:
    """Replace conjugated entries that equal a plain named twist (checked in the ambient)."""
    names = list(candidates) if candidates is not None else sorted(ambient.symbols())
    vals: dict = {}
    out = []
    for e in f.entries:
        if e.conj:
            v = ambient.value(e.word())
            order = [e.base] + [n for n in names if n != e.base]
            for n in order:
                if n not in vals:
                    vals[n] = ambient.value(((n, 1),))
                if ambient.same(v, vals[n]):
                    e = FactorEntry(n)
                    break
        out.append(e)
    return replace(f, entries=tuple(out))


@dataclass
class MoveLog:
    """Factorization plus the list of operations applied to reach it."""

    current: Factorization
    ambient: object
    steps: list = field(default_factory=list)
    milestones: list = field(default_factory=list)

    def move(self, i, direction="forward"):
        self.current = hurwitz_move(self.current, i, direction, self.ambient)
        self.steps.append(("hurwitz", i, direction, str(self.current)))

    def rotate(self, j):
        self.current = cyclic_permute(self.current, j, self.ambient)
        self.steps.append(("rotate", j, "", str(self.current)))

    def simplify(self, positions):
        entries = list(self.current.entries)
        for p in positions:
            e = entries[p - 1]
            s = simplify_entries(Factorization((e,)), self.ambient)
            if s.entries[0].conj:
                raise RelationError(f"entry {p} ({e}) does not simplify")
            entries[p - 1] = s.entries[0]
        self.current = replace(self.current, entries=tuple(entries))
        self.steps.append(("simplify", tuple(positions), "", str(self.current)))

    def slide_left(self, src, dst):
        """Move entry ``src`` to position ``dst < src`` by forward moves (1-based)."""
        for i in range(src - 1, dst - 1, -1):
            self.move(i, "forward")

    def slide_right(self, src, dst):
        for i in range(src, dst):
            self.move(i, "backward")

    def monoid_rewrite(self, start, target_word, coxeter):
        """Realize a comm/braid rewrite of plain entries start.. as Hurwitz moves."""
        n = len(as_twist_word(target_word))
        seg = Factorization(self.current.entries[start - 1:start - 1 + n])
        if any(e.conj for e in seg.entries):
            raise RelationError("monoid rewriting needs plain entries")
        symbols = sorted({s for s in seg.bases()})
        b = rw.ScriptBuilder(" ".join(seg.bases()), rw.coxeter_rules(coxeter, symbols))
        b.to_monoid_word(target_word, coxeter)
        for st in b.steps:
            p = start + st.position
            if st.rule.startswith("comm:"):
                self.move(p, "forward")
                self.simplify([p])
            else:
                # t s t -> s t s: forward at p+1 then at p, the first entry becomes s
                self.move(p + 1, "forward")
                self.move(p, "forward")
                self.simplify([p])
        got = self.current.bases()[start - 1:start - 1 + n]
        if got != [s for s, _ in as_twist_word(target_word)]:
            raise RelationError("monoid rewrite did not reach its target")

    def mark(self, label, expect: str | None = None):
        if expect is not None and str(self.current) != expect:
            raise RelationError(f"milestone {label!r}: got {self.current}, expected {expect}")
        self.milestones.append((len(self.steps), label, str(self.current)))


# -- the Sigma_2^2 curve system --------------------------------------------

CHAIN_SYMBOLS = ("1a", "1b", "2", "3", "4")


def chain_coxeter() -> dict:
    """Intersection pattern of 1a, 1b, 2, 3, 4: a D5 tree."""
    braid = {("1a", "2"), ("1b", "2"), ("2", "3"), ("3", "4")}
    out = {}
    for i, a in enumerate(CHAIN_SYMBOLS):
        for b in CHAIN_SYMBOLS[i + 1:]:
            out[frozenset((a, b))] = 3 if (a, b) in braid else 2
    return out


def coxeter_from_model(model: sf.SurfaceModel, symbols: Sequence[str]) -> dict:
    out = {}
    for i, a in enumerate(symbols):
        for b in symbols[i + 1:]:
            n = model.intersection(a, b)
            if n in (0, 1):
                out[frozenset((a, b))] = 2 + n
    return out


BK_DEFINITIONS = {
    "x1": "[3]^{(2 1a 1b 2)^-1}",
    "x2": "[2]^{4 3 3 4}",
    "x3": "[2]^{4 3 3 4 1a 1b 3}",
    "x4": "[2]^{4 3 3 4 1a 1b 3 3 1a 1b}",
    "y1": "[delta1]^{(x2 x3 x4)^-1 4 3}",
    "y2": "[delta1]^{delta3}",
    "y3": "delta3",
}
# As printed: y2 = delta1 and y3 = delta3.  delta1 and delta3 intersect, so
# the order matters and this version does not hold (kept as a control).
BK_PRINTED = {**BK_DEFINITIONS, "y2": "delta1", "y3": "delta3"}
BK_WORD = "x1 x2 x3 x4 y1 y2 y3"
BK_TARGET = "delta0 delta2"

REL2_RHS_EXPANDED = "3 4 2 1a 1b 3 2 3 1a 1b 2 (3 4)^3 2 1a 1b 2 3 2 1a 1b 2 4 3"


@dataclass(frozen=True)
class BKResult:
    factorization: Factorization
    verified: bool
    nonseparating: int
    separating: int
    separating_pattern: tuple
    elapsed: float


def bk_factorization(definitions: Mapping[str, str] = BK_DEFINITIONS) -> Factorization:
    """x_1 .. y_3 as entries (base, conjugator) with target delta0 delta2."""
    macros: dict = {}
    for name, text in definitions.items():
        macros[name] = parse_expression(text, macros)
    entries = []
    for name in BK_WORD.split():
        text = definitions[name].strip()
        if text.startswith("["):
            close = text.index("]")
            base = parse_expression(text[1:close])
            if len(base) != 1 or base[0][1] != 1:
                raise RelationError(f"{name}: base must be a single positive twist")
            conj_text = text[close + 2:]
            if conj_text.startswith("{"):
                conj_text = conj_text[1:-1]
            entries.append(FactorEntry(base[0][0], parse_expression(conj_text, macros)))
        else:
            entries.append(FactorEntry(parse_expression(text)[0][0]))
    f = Factorization(tuple(entries), parse_expression(BK_TARGET))
    if f.word() != parse_expression(BK_WORD, macros):
        raise RelationError("entry decomposition disagrees with the expanded word")
    return f


def derive_baykur_korkmaz(model: sf.SurfaceModel, definitions: Mapping[str, str] = BK_DEFINITIONS) -> BKResult:
    t0 = time.perf_counter()
    f = bk_factorization(definitions)
    ok = verify_factorization(f, Pi1Ambient(model))
    pattern = tuple(sf.is_separating(model, e.base) for e in f.entries)
    n_sep = sum(pattern)
    return BKResult(f, ok, len(pattern) - n_sep, n_sep, pattern, time.perf_counter() - t0)


def hurwitz_chain(model: sf.SurfaceModel) -> MoveLog:
    """Replay the passage from the expanded Rel-2 line to the bracketed form."""
    amb = Pi1Ambient(model)
    start = f"delta0 delta1 {REL2_RHS_EXPANDED}"
    f = Factorization.from_symbols(start, "delta0^3 delta2")
    if not verify_factorization(f, amb):
        raise RelationError("starting line does not hold")
    log = MoveLog(f, amb)
    log.mark("start", str(f))
    log.rotate(-2)                       # 4 3 to the front
    log.slide_left(3, 1)                 # delta0 past 4 3
    log.simplify([1])
    log.slide_left(4, 2)                 # delta1 past 4 3 -> [delta1]^{4 3}
    log.mark("cyclic permutation", "delta0 [delta1]^{4 3} 4 3 3 4 2 1a 1b 3 2 3 1a 1b 2 "
             "3 4 3 4 3 4 2 1a 1b 2 3 2 1a 1b 2")
    log.slide_left(7, 3)                 # [2]^{4334}
    log.slide_left(11, 4)                # [2]^{4334 1a 1b 3}
    log.slide_left(15, 5)                # [2]^{4334 1a 1b 3 3 1a 1b}
    # the 3 between the two (2 1a 1b 2) blocks travels to the end
    n = len(log.current)
    log.slide_right(n - 4, n)
    log.monoid_rewrite(6, "(1a 1b)^2 (3 4)^6 (2 1a 1b 2)^2", chain_coxeter())
    log.mark("bracketed form", "delta0 [delta1]^{4 3} [2]^{4 3^2 4} [2]^{4 3^2 4 1a 1b 3} "
             "[2]^{4 3^2 4 1a 1b 3^2 1a 1b} 1a 1b 1a 1b 3 4 3 4 3 4 3 4 3 4 3 4 "
             "2 1a 1b 2 2 1a 1b 2 [3]^{2^-1 1b^-1 1a^-1 2^-1}")
    if not verify_factorization(log.current, amb):
        raise RelationError("chain end does not multiply to the target")
    return log


# -- the commutator presentation ----------------------------------------------

COMMUTATOR_LHS = "x3 x4 y1 y2 y3"
COMMUTATOR_RHS = "delta0 x2^-1 psi x2 delta0^-1 psi^-1"


def commutator_rules() -> rw.RuleSet:
    rules = rw.RuleSet()
    for name, lhs, rhs in (
        ("psi-delta0", "psi delta0 psi^-1", "x1"),
        ("psi-x2", "psi x2 psi^-1", "delta2"),
        ("bk", "x1 x2 x3 x4 y1 y2 y3", "delta0 delta2"),
    ):
        rules = rules.merged(rw.equation_rules(name, lhs, rhs, inverses=True))
    # disjoint pairs commute; the mixed-sign forms are what the script uses
    for name, lhs, rhs in (
        ("comm-delta0-x2", "delta0 x2^-1", "x2^-1 delta0"),
        ("comm-delta2-x1", "delta2 x1^-1", "x1^-1 delta2"),
        ("comm-delta0-x1", "delta0 x1^-1", "x1^-1 delta0"),
    ):
        rules = rules.merged(rw.equation_rules(name, lhs, rhs))
    return rules


def build_commutator_script() -> rw.RewriteScript:
    """Reduce [delta0 x2^-1, psi] (x3 x4 y1 y2 y3)^-1 to the empty word."""
    rules = commutator_rules()
    start = f"({COMMUTATOR_RHS}) ({COMMUTATOR_LHS})^-1"
    b = rw.ScriptBuilder(start, rules)
    # delta0 x2^-1 psi x2 delta0^-1 psi^-1 y3^-1 y2^-1 y1^-1 x4^-1 x3^-1
    b.insert(4, "psi", -1)                # ... psi x2 psi^-1 psi delta0^-1 psi^-1 ...
    b.apply("psi-x2", 2)                  # delta0 x2^-1 delta2 psi delta0^-1 psi^-1 ...
    b.apply("psi-delta0'", 3)             # delta0 x2^-1 delta2 x1^-1 ...
    b.mark("psi eliminated", "delta0 x2^-1 delta2 x1^-1 y3^-1 y2^-1 y1^-1 x4^-1 x3^-1")
    # move x2^-1 x1^-1 in front of the boundary twists
    b.apply("comm-delta0-x2", 0)          # x2^-1 delta0 delta2 x1^-1 ...
    b.apply("comm-delta2-x1", 2)          # x2^-1 delta0 x1^-1 delta2 ...
    b.apply("comm-delta0-x1", 1)          # x2^-1 x1^-1 delta0 delta2 ...
    b.apply("bk~", 2)                     # x2^-1 x1^-1 x1 x2 x3 x4 y1 y2 y3 y3^-1 ...
    b.cancel_all()
    return b.build("commutator-genus3", "", "genus-3 commutator presentation")


@dataclass(frozen=True)
class CommutatorReport:
    symbolic: rw.ReplayReport
    precheck: tuple
    witness: list | None
    homology_ok: bool
    census: tuple
    message: str = ""

    @property
    def verified(self) -> bool:
        return self.symbolic.verified and all(ok for _, ok in self.precheck) and self.homology_ok


def commutator_presentation_check(context: Context | None = None,
                                  script: rw.RewriteScript | None = None,
                                  rules: rw.RuleSet | None = None,
                                  genus: int = 3) -> CommutatorReport:
    ctx = context or Context()
    script = script or load_named_script(ctx, "commutator-genus3")
    symbolic = rw.replay_script(script, rules)
    closed = ctx.closed_model(genus)
    classes = bk_classes(closed)
    for n in ("delta0", "delta2"):
        classes[n] = tuple(closed.class_of(n))
    L = closed.lattice
    pre = (("<delta0,x2> = 0", L.pairing(classes["delta0"], classes["x2"]) == 0),
           ("<x1,delta2> = 0", L.pairing(classes["x1"], classes["delta2"]) == 0))
    witness, hom_ok, msg = None, False, ""
    try:
        witness = hom.symplectic_witness(L, [classes["delta0"], classes["x2"]],
                                         [classes["x1"], classes["delta2"]])
        amb = HomologyAmbient(L, classes, {"psi": witness})
        hom_ok = amb.same(amb.value(parse_expression(COMMUTATOR_LHS)),
                          amb.value(parse_expression(COMMUTATOR_RHS)))
    except hom.HomologyError as e:
        msg = f"no homology witness: {e}"
    sep = sum(1 for n in COMMUTATOR_LHS.split() if not any(classes[n]))
    return CommutatorReport(symbolic, pre, witness, hom_ok, (5 - sep, sep), msg)


def bk_classes(closed: sf.HomologyModel, definitions: Mapping[str, str] = BK_DEFINITIONS) -> dict:
    """Classes of x_1 .. y_3 in a closed model: the class of C(b) is C_*[b]."""
    amb = HomologyAmbient.of(closed)
    f = bk_factorization(definitions)
    return {name: tuple(hom.mat_vec(amb.value(e.conj), closed.class_of(e.base)))
            for name, e in zip(BK_WORD.split(), f.entries)}


def genus3_signature(context: Context | None = None) -> int:
    """Signature of the five-fiber fibration over the torus in genus 3."""
    ctx = context or Context()
    closed = ctx.closed_model(3)
    rep = commutator_presentation_check(ctx)
    if rep.witness is None:
        raise RelationError(rep.message)
    classes = bk_classes(closed)
    names = COMMUTATOR_LHS.split()
    amb = HomologyAmbient(closed.lattice, {**classes, **{n: closed.class_of(n) for n in ("delta0", "delta2")}})
    A = amb.value("delta0 x2^-1")
    return hom.signature_of_factorization(closed.lattice, [classes[n] for n in names],
                                          [not any(classes[n]) for n in names], (A, rep.witness))


# -- catalog -----------------------------------------------------------------

@dataclass(frozen=True)
class RelationEntry:
    name: str
    lhs: str
    rhs: str
    model: str = "sigma_2_2"
    mode: str = "pi1"
    definitions: Mapping = field(default_factory=dict)
    script: str | None = None
    genus_range: tuple | None = None
    statement: str = ""

    def to_json(self) -> dict:
        d = {"name": self.name, "lhs": self.lhs, "rhs": self.rhs, "model": self.model, "mode": self.mode}
        if self.definitions:
            d["definitions"] = dict(self.definitions)
        if self.script:
            d["script"] = self.script
        if self.genus_range:
            d["genus_range"] = list(self.genus_range)
        if self.statement:
            d["statement"] = self.statement
        return d

    @classmethod
    def from_json(cls, d) -> "RelationEntry":
        return cls(d["name"], d["lhs"], d["rhs"], d.get("model", "sigma_2_2"), d.get("mode", "pi1"),
                   dict(d.get("definitions", {})), d.get("script"),
                   tuple(d["genus_range"]) if d.get("genus_range") else None, d.get("statement", ""))


@dataclass(frozen=True)
class VerificationResult:
    name: str
    mode: str
    verified: bool
    necessary_only: bool
    trace: tuple
    seconds: float


def load_named_script(ctx: Context, name: str) -> rw.RewriteScript:
    return rw.load_script(ctx.dir / "scripts" / f"{name}.json")


def verify_relation(entry: RelationEntry, context: Context | None = None,
                    mode: str | None = None) -> VerificationResult:
    ctx = context or Context()
    mode = mode or entry.mode
    t0 = time.perf_counter()
    trace = []
    lhs = expand_conjugate_notation(entry.lhs, entry.definitions)
    rhs = expand_conjugate_notation(entry.rhs, entry.definitions)
    if mode == "replay":
        script = load_named_script(ctx, entry.script or entry.name)
        if script.start != lhs or script.target != rhs:
            ok = False
            trace.append("script endpoints differ from the relation")
        else:
            rep = rw.replay_script(script)
            ok = rep.verified
            trace.append(f"replayed {len(script.steps)} steps: {'ok' if ok else rep.first_failure}")
            if not ok and entry.model.startswith("sigma_2"):
                m = ctx.model(entry.model)
                if sf.same_mapping_class(m, lhs, rhs):
                    trace.append("pi1 check passes: the script has a transcription error")
        return VerificationResult(entry.name, mode, ok, False, tuple(trace), time.perf_counter() - t0)
    genera = [None]
    if entry.model == "sigma_g_0":
        lo, hi = entry.genus_range or (3, 3)
        genera = list(range(lo, hi + 1))
    ok = True
    for g in genera:
        model = ctx.closed_model(g) if g is not None else ctx.model(entry.model)
        if mode == "pi1" and not isinstance(model, sf.SurfaceModel):
            raise RelationError(f"{entry.name}: pi1 mode needs a bounded model")
        if mode == "homology" and "psi" in {s for s, _ in lhs + rhs}:
            res = commutator_presentation_check(ctx, genus=g or model.genus)
            this = res.homology_ok
        else:
            amb = ambient_for(model, mode)
            this = amb.same(amb.value(lhs), amb.value(rhs))
        trace.append(f"{model.name}: {'equal' if this else 'different'}")
        ok = ok and this
    return VerificationResult(entry.name, mode, ok, mode == "homology", tuple(trace), time.perf_counter() - t0)


def catalog(context: Context | None = None) -> list:
    ctx = context or Context()
    data = json.loads((ctx.dir / "relations" / "catalog.json").read_text(encoding="utf-8"))
    return sorted((RelationEntry.from_json(d) for d in data["relations"]), key=lambda e: e.name)


def save_catalog(entries: Sequence[RelationEntry], path) -> Path:
    path = Path(path)
    path.write_text(json.dumps({"relations": [e.to_json() for e in entries]}, indent=1, ensure_ascii=False)
                    + "\n", encoding="utf-8")
    return path


def default_entries() -> list:
    """The shipped catalog."""
    R = "(3 2 1a 1b 2 3)^2 (4 3 2 1a 1b 2 3 4)^2"
    return [
        RelationEntry("braid-2-3", "2 3 2", "3 2 3", statement="adjacent chain curves meet once"),
        RelationEntry("braid-3-4", "3 4 3", "4 3 4"),
        RelationEntry("braid-1a-2", "1a 2 1a", "2 1a 2"),
        RelationEntry("commute-2-4", "2 4", "4 2", statement="2 and 4 are disjoint"),
        RelationEntry("commute-1a-1b", "1a 1b", "1b 1a"),
        RelationEntry("three-chain", "(1a 2 1b)^4", "delta0 delta1"),
        RelationEntry("two-chain", "(3 4)^6", "delta3"),
        RelationEntry("lift", "(1a 2 3 4 1b 2 3 4)^5", "delta0^3 delta2"),
        RelationEntry("rel-2", R, "delta0^2 delta1^-1 delta2"),
        RelationEntry("rel-2-expanded", R, REL2_RHS_EXPANDED, mode="replay", script="rel2-expansion"),
        RelationEntry("lift-expansion", "(1a 2 3 4 1b 2 3 4)^5",
                      "(1a 1b)^2 (2 1a 1b 2)^2 (3 2 1a 1b 2 3)^2 (4 3 2 1a 1b 2 3 4)^2",
                      mode="replay", script="lift-expansion"),
        RelationEntry("four-chain-capped", "(1a 2 3 4)^10", "delta2", model="sigma_2_1"),
        RelationEntry("baykur-korkmaz", BK_WORD, BK_TARGET, definitions=dict(BK_DEFINITIONS)),
        RelationEntry("baykur-korkmaz-closed", BK_WORD, BK_TARGET, model="sigma_3_0", mode="homology",
                      definitions=dict(BK_DEFINITIONS)),
        RelationEntry("genus3-commutator", f"({COMMUTATOR_RHS}) ({COMMUTATOR_LHS})^-1", "",
                      model="sigma_3_0", mode="replay", script="commutator-genus3"),
        RelationEntry("genus-g-commutator", COMMUTATOR_LHS, COMMUTATOR_RHS, model="sigma_g_0",
                      mode="homology", definitions=dict(BK_DEFINITIONS), genus_range=(3, 8)),
    ]


def write_shipped_data(directory: Path | None = None) -> list:
    directory = directory or sf.DATA_DIR
    (directory / "scripts").mkdir(parents=True, exist_ok=True)
    (directory / "relations").mkdir(parents=True, exist_ok=True)
    D5 = chain_coxeter()
    P, Q, Qp = "1a 2 3 4 1b 2 3 4", "1a 2 3 4", "1b 2 3 4"
    A, B, C, D = "1a 1b", "2 1a 1b 2", "3 2 1a 1b 2 3", "4 3 2 1a 1b 2 3 4"
    X = f"{A} {B} {C} {D}"
    lift_lines = [
        f"({P})^5",
        f"({P})^2 {Q} {Qp} ({P})^2",
        f"1a 2 3 1b 2 3 1a 2 3 1b 2 3 4 3 2 1b 1a 2 3 4 {Qp} ({P})^2",
        f"1a 2 1b 2 1a 2 3 2 1a 1b 2 3 4 3 2 1b 1a 2 3 4 {Qp} ({P})^2",
        f"{X} {Qp} ({P})^2",
        f"{X} {X}",
        f"({A})^2 ({B})^2 ({C})^2 ({D})^2",
    ]
    labels = ["P^5", "P^2 Q Q' P^2", "first braid line", "second braid line",
              "P^2 Q as a product of the commuting set", "Q' P^2 likewise", "commuting set collected"]
    out = [rw.save_script(rw.build_monoid_script("lift-expansion", lift_lines, D5, CHAIN_SYMBOLS, labels),
                          directory / "scripts" / "lift-expansion.json")]
    rel2_lines = [f"({C})^2 ({D})^2", f"({C}) ({D})^2 ({C})", REL2_RHS_EXPANDED]
    out.append(rw.save_script(rw.build_monoid_script("rel2-expansion", rel2_lines, D5, CHAIN_SYMBOLS,
                                                     ["start", "conjugated", "expanded"]),
                              directory / "scripts" / "rel2-expansion.json"))
    out.append(rw.save_script(build_commutator_script(), directory / "scripts" / "commutator-genus3.json"))
    out.append(save_catalog(default_entries(), directory / "relations" / "catalog.json"))
    return out


if __name__ == "__main__":
    for p in write_shipped_data():
        print(p)
