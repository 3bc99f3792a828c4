"""Surface models: curves, arcs and Dehn twists acting on pi_1.

A bounded model is a free group on the generators dual to a disk-cutting
arc system, plus (when there are two boundary components) a connector
letter ``z`` standing for a fixed path from the basepoint on the first
boundary to a point on the second.  Twists act on the free group of rank
``r + 1`` formed by the generators and ``z``: loops map to loops and
``z`` maps to ``u z``.  Identity on all of these is identity as a mapping
class fixing the boundary pointwise.

Closed surfaces obtained by capping everything are homology-only.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Mapping, Sequence

from . import homology as hom
from .twistwords import as_twist_word, normalize_symbol
from .words import (Alphabet, FreeGroupAut, Word, WordError, abelianize, aut_equal,
                    conjugate_equal, cyclic_reduce, invert_word, multiply,
                    power, reduce)

DATA_DIR = Path(__file__).parent / "data"


class CurveSystemError(ValueError):
    """Invalid curve-system document; ``check`` names the violated invariant."""

    def __init__(self, check: str, message: str):
        super().__init__(f"{check}: {message}")
        self.check = check


class UnknownSymbolError(KeyError):
    def __str__(self):
        return f"unknown symbol {self.args[0]!r}"


class CapError(ValueError):
    pass


@dataclass(frozen=True)
class NamedCurve:
    name: str
    word: Word
    h1: tuple
    separating: bool


@dataclass(frozen=True)
class NamedArc:
    name: str
    word: Word  # loop part followed by the connector letter


@dataclass(frozen=True)
class TwistGenerator:
    curve: str
    action: FreeGroupAut
    inverse: FreeGroupAut
    handedness: int = 1


@dataclass(frozen=True)
class SurfaceModel:
    name: str
    genus: int
    boundaries: tuple
    alphabet: Alphabet          # generators, then the connector if present
    rank: int                   # number of pi_1 generators
    connector: str | None
    boundary_words: Mapping
    basepoint: str
    solve_for: Mapping
    lattice: hom.H1Lattice
    curves: Mapping
    arcs: Mapping
    twists: Mapping
    intersections: Mapping      # frozenset({a, b}) -> geometric count
    connector_form: tuple | None = None
    conventions: Mapping = field(default_factory=dict)

    @property
    def generators(self) -> tuple:
        return self.alphabet.names[: self.rank]

    @property
    def full_rank(self) -> int:
        return self.alphabet.rank

    def curve(self, name: str) -> NamedCurve:
        key = normalize_symbol(name)
        if key not in self.curves:
            raise UnknownSymbolError(name)
        return self.curves[key]

    def arc(self, name: str) -> NamedArc:
        key = _arc_key(name)
        if key not in self.arcs:
            raise UnknownSymbolError(name)
        return self.arcs[key]

    def twist(self, name: str) -> TwistGenerator:
        key = normalize_symbol(name)
        if key not in self.twists:
            raise UnknownSymbolError(name)
        return self.twists[key]

    def parse_word(self, text: str) -> Word:
        return self.alphabet.parse(text)

    def format_word(self, w: Sequence[int]) -> str:
        return self.alphabet.format(w)

    def intersection(self, a: str, b: str) -> int | None:
        return self.intersections.get(frozenset((normalize_symbol(a), normalize_symbol(b))))


def _arc_key(name: str) -> str:
    return {"α": "alpha", "β": "beta"}.get(name, name)


# -- loading ---------------------------------------------------------------

def _read_document(document) -> dict:
    if isinstance(document, dict):
        return document
    text = Path(document).read_text(encoding="utf-8") if isinstance(document, (str, Path)) \
        and not str(document).lstrip().startswith("{") else str(document)
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise CurveSystemError("parse", f"line {e.lineno} column {e.colno}: {e.msg}") from None


def _require(doc, key, where="document"):
    if key not in doc:
        raise CurveSystemError("parse", f"missing key {key!r} in {where}")
    return doc[key]


def load_curve_system(document) -> SurfaceModel:
    """Build a validated immutable model from a document, path or JSON text."""
    doc = _read_document(document)
    if doc.get("kind") == "homology":
        raise CurveSystemError("kind", "homology-only document; use load_homology_model")
    surf = _require(doc, "surface")
    pi1 = _require(doc, "pi1")
    genus = int(_require(surf, "genus", "surface"))
    boundaries = tuple(_require(surf, "boundaries", "surface"))
    gens = tuple(_require(pi1, "generators", "pi1"))
    connector = pi1.get("connector")
    if len(boundaries) < 1:
        raise CurveSystemError("boundary", "bounded models need at least one boundary")
    if len(gens) != 2 * genus + len(boundaries) - 1:
        raise CurveSystemError("rank", f"{len(gens)} generators, expected 2g+b-1 = "
                                       f"{2 * genus + len(boundaries) - 1}")
    if (connector is not None) != (len(boundaries) == 2):
        raise CurveSystemError("connector", "a connector is required exactly when there are two boundaries")
    if len(boundaries) > 2:
        raise CurveSystemError("boundary", "at most two boundary components are supported")
    try:
        alphabet = Alphabet(gens + ((connector,) if connector else ()))
    except WordError as e:
        raise CurveSystemError("parse", str(e)) from None
    rank = len(gens)
    full = alphabet.rank

    def word(text, where):
        try:
            return alphabet.parse(text)
        except (WordError, ValueError) as e:
            raise CurveSystemError("parse", f"{where}: {e}") from None

    def loop_word(text, where):
        w = word(text, where)
        if connector and alphabet.index(connector) + 1 in map(abs, w):
            raise CurveSystemError("parse", f"{where}: loop word uses the connector")
        return w

    try:
        lattice = hom.H1Lattice(tuple(tuple(r) for r in _require(doc, "intersection_form")))
    except hom.HomologyError as e:
        raise CurveSystemError("intersection-form", str(e)) from None
    if lattice.rank != rank:
        raise CurveSystemError("intersection-form", f"form has rank {lattice.rank}, alphabet {rank}")

    bw_doc = _require(pi1, "boundary_words", "pi1")
    bwords, solve_for, basepoint = {}, {}, None
    for b in boundaries:
        entry = _require(bw_doc, b, "pi1.boundary_words")
        bwords[b] = loop_word(entry["word"], f"boundary {b}")
        if entry.get("solve_for"):
            solve_for[b] = entry["solve_for"]
        if entry.get("basepoint"):
            if basepoint is not None:
                raise CurveSystemError("boundary", "more than one basepoint boundary")
            basepoint = b
    if basepoint is None:
        raise CurveSystemError("boundary", "no boundary carries the basepoint")
    total = [0] * rank
    for w in bwords.values():
        total = [a + b for a, b in zip(total, abelianize(w, full)[:rank])]
    if any(total):
        raise CurveSystemError("boundary", f"boundary classes sum to {total}, not zero")

    bclasses = [abelianize(w, full)[:rank] for w in bwords.values()]
    curves = {}
    for c in _require(doc, "curves"):
        name = normalize_symbol(c["name"])
        w = cyclic_reduce(loop_word(c["word"], f"curve {name}"))
        h1 = tuple(abelianize(w, full)[:rank])
        if "h1" in c and tuple(c["h1"]) != h1:
            raise CurveSystemError("curve-h1", f"curve {name}: declared {c['h1']}, word gives {list(h1)}")
        sep = _in_span(bclasses, h1)
        if "separating" in c and bool(c["separating"]) != sep:
            raise CurveSystemError("separating", f"curve {name}: flag {c['separating']} but class says {sep}")
        curves[name] = NamedCurve(name, w, h1, sep)

    arcs = {}
    for a in doc.get("arcs", []):
        w = word(a["word"], f"arc {a['name']}")
        zi = alphabet.index(connector) + 1 if connector else None
        if zi is None or not w or w[-1] != zi or zi in map(abs, w[:-1]):
            raise CurveSystemError("arc-connector", f"arc {a['name']}: connector must appear exactly once, last")
        arcs[a["name"]] = NamedArc(a["name"], w)

    twists = {}
    for t in doc.get("twists", []):
        name = normalize_symbol(t["curve"])
        if name not in curves:
            raise CurveSystemError("unknown-curve", f"twist along undeclared curve {name}")
        if "images" not in t:
            raise CurveSystemError("missing-images", f"twist {name} has no action table")
        if not t.get("inverse_images"):
            raise CurveSystemError("missing-inverse", f"twist {name} has no inverse table")
        tables = []
        for key in ("images", "inverse_images"):
            imgs = t[key]
            missing = [g for g in alphabet.names if g not in imgs]
            if missing:
                raise CurveSystemError("missing-inverse" if key == "inverse_images" else "missing-images",
                                       f"twist {name}: {key} lacks {missing}")
            tables.append(FreeGroupAut(tuple(word(imgs[g], f"twist {name} {key}[{g}]")
                                             for g in alphabet.names)))
        act, inv = tables
        if connector:
            zi = full
            for tab in (act, inv):
                img = tab.images[zi - 1]
                if not img or img[-1] != zi or zi in map(abs, img[:-1]):
                    raise CurveSystemError("connector", f"twist {name}: connector image must be u z")
                if any(zi in map(abs, tab.images[i]) for i in range(rank)):
                    raise CurveSystemError("connector", f"twist {name}: loop image uses the connector")
        twists[name] = TwistGenerator(name, act, inv, int(t.get("handedness", 1)))
    for name in curves:
        if name not in twists:
            raise CurveSystemError("missing-twist", f"curve {name} has no twist tables")

    inters = {}
    for e in doc.get("intersections", []):
        a, b = normalize_symbol(e["a"]), normalize_symbol(e["b"])
        if a not in curves or b not in curves:
            raise CurveSystemError("unknown-curve", f"intersection entry ({a}, {b})")
        if int(e["count"]) < 0:
            raise CurveSystemError("intersections", f"negative count for ({a}, {b})")
        inters[frozenset((a, b))] = int(e["count"])

    cf = doc.get("connector_form")
    return SurfaceModel(
        name=surf.get("name", f"sigma_{genus}_{len(boundaries)}"),
        genus=genus,
        boundaries=boundaries,
        alphabet=alphabet,
        rank=rank,
        connector=connector,
        boundary_words=MappingProxyType(bwords),
        basepoint=basepoint,
        solve_for=MappingProxyType(solve_for),
        lattice=lattice,
        curves=MappingProxyType(curves),
        arcs=MappingProxyType(arcs),
        twists=MappingProxyType(twists),
        intersections=MappingProxyType(inters),
        connector_form=tuple(cf) if cf is not None else None,
        conventions=MappingProxyType(dict(doc.get("conventions", {}))),
    )


def _in_span(vectors, target) -> bool:
    if not any(target):
        return True
    vs = [v for v in vectors if any(v)]
    if not vs:
        return False
    return hom.solve_integer(hom.transpose(vs), list(target)) is not None


def to_document(model: SurfaceModel) -> dict:
    fmt = model.alphabet.format
    bw = {}
    for b in model.boundaries:
        entry = {"word": fmt(model.boundary_words[b]), "basepoint": b == model.basepoint}
        if b in model.solve_for:
            entry["solve_for"] = model.solve_for[b]
        bw[b] = entry
    doc = {
        "surface": {"genus": model.genus, "boundaries": list(model.boundaries), "name": model.name},
        "conventions": dict(model.conventions),
        "pi1": {"generators": list(model.generators), "connector": model.connector, "boundary_words": bw},
        "intersection_form": [list(r) for r in model.lattice.form],
        "curves": [{"name": c.name, "word": fmt(c.word), "h1": list(c.h1), "separating": c.separating}
                   for c in model.curves.values()],
        "arcs": [{"name": a.name, "word": fmt(a.word)} for a in model.arcs.values()],
        "twists": [{"curve": t.curve,
                    "images": {g: fmt(w) for g, w in zip(model.alphabet.names, t.action.images)},
                    "inverse_images": {g: fmt(w) for g, w in zip(model.alphabet.names, t.inverse.images)}}
                   for t in model.twists.values()],
        "intersections": [{"a": a, "b": b, "count": n}
                          for (a, b), n in sorted((tuple(sorted(k)), v) for k, v in model.intersections.items())],
    }
    if model.connector_form is not None:
        doc["connector_form"] = list(model.connector_form)
    return doc


def save_model(model: SurfaceModel, path) -> Path:
    path = Path(path)
    path.write_text(json.dumps(to_document(model), indent=1, ensure_ascii=False) + "\n", encoding="utf-8")
    return path


def load_shipped(name: str = "sigma_2_2", data_dir: Path | None = None) -> SurfaceModel:
    return load_curve_system((data_dir or DATA_DIR) / f"{name}.json")


# -- validation ------------------------------------------------------------

@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def __iter__(self):
        return iter(self.checks)


def transvection_matrix(model: SurfaceModel, curve: str) -> list:
    return hom.transvection(model.lattice, model.curve(curve).h1)


def _generator_block(phi: FreeGroupAut, rank: int) -> list:
    ab = phi.abelianization()
    return [row[:rank] for row in ab[:rank]]


def validate_twist_tables(model: SurfaceModel) -> ValidationReport:
    """Check every twist table against the relations it must satisfy."""
    checks = []
    ident = FreeGroupAut.identity(model.full_rank)
    for name, t in sorted(model.twists.items()):
        c = model.curves[name]
        ok = aut_equal(t.action @ t.inverse, ident) and aut_equal(t.inverse @ t.action, ident)
        checks.append(CheckResult(f"inverse:{name}", ok))
        ok = conjugate_equal(t.action(c.word), c.word)
        checks.append(CheckResult(f"fixes-own-curve:{name}", ok))
        got = _generator_block(t.action, model.rank)
        want = transvection_matrix(model, name)
        checks.append(CheckResult(f"transvection:{name}", got == want,
                                  "" if got == want else f"abelianization {got} != {want}"))
    for key in sorted(model.intersections, key=lambda k: tuple(sorted(k))):
        a, b = sorted(key)
        n = model.intersections[key]
        ta, tb = model.twists[a].action, model.twists[b].action
        alg = model.lattice.pairing(model.curves[a].h1, model.curves[b].h1)
        ok = abs(alg) <= n and (n - alg) % 2 == 0
        checks.append(CheckResult(f"parity:{a},{b}", ok, f"geometric {n}, algebraic {alg}"))
        if n == 0:
            ok = aut_equal(ta @ tb, tb @ ta)
            checks.append(CheckResult(f"commute:{a},{b}", ok))
        elif n == 1:
            ok = aut_equal(ta @ tb @ ta, tb @ ta @ tb)
            checks.append(CheckResult(f"braid:{a},{b}", ok))
    return ValidationReport(tuple(checks))


# -- evaluation ------------------------------------------------------------

def evaluate_mcg_word(model: SurfaceModel, word) -> FreeGroupAut:
    """Composite automorphism of a twist word, functional order."""
    tw = as_twist_word(word)
    images = [(i + 1,) for i in range(model.full_rank)]
    for sym, e in reversed(tw):
        t = model.twists.get(sym)
        if t is None:
            raise UnknownSymbolError(sym)
        phi = t.action if e > 0 else t.inverse
        images = [phi(w) for w in images]
    return FreeGroupAut(tuple(images))


def is_identity(model: SurfaceModel, word) -> bool:
    return aut_equal(evaluate_mcg_word(model, word), FreeGroupAut.identity(model.full_rank))


def same_mapping_class(model: SurfaceModel, u, v) -> bool:
    return aut_equal(evaluate_mcg_word(model, u), evaluate_mcg_word(model, v))


def image_of_curve(model: SurfaceModel, word, curve: str) -> Word:
    phi = evaluate_mcg_word(model, word)
    return cyclic_reduce(phi(model.curve(curve).word))


FIXED_ORIENTED = "fixed-oriented"
FIXED_UNORIENTED = "fixed-unoriented"
MOVED = "moved"


def fixed_up_to_isotopy(model: SurfaceModel, word, curve: str) -> str:
    img = image_of_curve(model, word, curve)
    c = model.curve(curve).word
    if conjugate_equal(img, c):
        return FIXED_ORIENTED
    if conjugate_equal(img, invert_word(c)):
        return FIXED_UNORIENTED
    return MOVED


@dataclass(frozen=True)
class ArcVerdict:
    """Arc fixedness; ``slides`` are the boundary-word powers used, if any."""

    fixed: bool
    slides: tuple | None = None

    @property
    def strict(self) -> bool:
        return self.fixed and self.slides == (0, 0)

    def __bool__(self):
        return self.fixed


def arc_fixed(model: SurfaceModel, word, arc: str, max_slide: int | None = None) -> ArcVerdict:
    """Is the arc's image equal to it up to sliding its endpoints along the boundaries?"""
    a = model.arc(arc)
    phi = evaluate_mcg_word(model, word)
    img = phi(a.word)
    zi = model.full_rank
    if not img or img[-1] != zi:
        return ArcVerdict(False)
    W, Wp = a.word[:-1], img[:-1]
    other = next(b for b in model.boundaries if b != model.basepoint)
    d0 = model.boundary_words[model.basepoint]
    d2 = cyclic_reduce(model.boundary_words[other])
    if d2 != model.boundary_words[other]:
        raise CapError("far boundary word must be cyclically reduced")
    bound = max_slide if max_slide is not None else len(W) + len(Wp) + 2
    Winv = invert_word(W)
    for i in sorted(range(-bound, bound + 1), key=abs):
        rest = multiply(Winv, power(d0, -i), Wp)
        # rest must be a power of the far boundary word
        if not rest:
            return ArcVerdict(True, (i, 0))
        if len(rest) % len(d2):
            continue
        j = len(rest) // len(d2)
        for jj in (j, -j):
            if power(d2, jj) == rest:
                return ArcVerdict(True, (i, jj))
    return ArcVerdict(False)


def is_separating(model: SurfaceModel, curve: str) -> bool:
    c = model.curve(curve)
    bclasses = [abelianize(w, model.full_rank)[: model.rank] for w in model.boundary_words.values()]
    return _in_span(bclasses, c.h1)


def homology_rep(model: SurfaceModel, word) -> list:
    classes = {n: c.h1 for n, c in model.curves.items()}
    return hom.symplectic_rep(model.lattice, classes, as_twist_word(word))


# -- capping ---------------------------------------------------------------

def _solve_boundary(model: SurfaceModel, boundary: str):
    """Express the designated generator through the others using boundary = 1."""
    w = model.boundary_words[boundary]
    gen = model.solve_for.get(boundary)
    if gen is None:
        counts = {}
        for x in w:
            counts[abs(x)] = counts.get(abs(x), 0) + 1
        once = [i for i in sorted(counts) if counts[i] == 1]
        if not once:
            raise CapError(f"boundary word of {boundary} is not solvable for a single generator")
        gen = model.alphabet.names[once[0] - 1]
    if gen not in model.generators:
        raise CapError(f"designated generator {gen!r} for {boundary} was already eliminated")
    gi = model.alphabet.index(gen) + 1
    pos = [k for k, x in enumerate(w) if abs(x) == gi]
    if len(pos) != 1:
        raise CapError(f"generator {gen} occurs {len(pos)} times in the {boundary} word")
    k = pos[0]
    A, B = w[:k], w[k + 1:]
    # A g^e B = 1  =>  g^e = A^-1 B^-1
    val = multiply(invert_word(A), invert_word(B))
    if w[k] < 0:
        val = invert_word(val)
    return gen, gi, val


def cap_disk(model: SurfaceModel, boundary: str) -> SurfaceModel:
    """Glue a disk to one boundary component and rewrite all tables."""
    boundary = normalize_symbol(boundary)
    if boundary not in model.boundaries:
        raise CapError(f"{boundary} is not a boundary of {model.name}")
    if len(model.boundaries) == 1:
        raise CapError("capping the last boundary gives a closed surface; closed surfaces are homology-only")
    gen, gi, val = _solve_boundary(model, boundary)
    keep = [i + 1 for i in range(model.rank) if i + 1 != gi]
    renum = {old: new for new, old in enumerate(keep, start=1)}
    zi = model.full_rank

    def subst(w):
        out = []
        for x in w:
            if abs(x) == gi:
                out.extend(val if x > 0 else invert_word(val))
            elif abs(x) == zi and model.connector:
                raise CapError("connector letter in a loop word")
            else:
                out.append(x)
        out = reduce(out)
        return tuple(renum[abs(x)] * (1 if x > 0 else -1) for x in out)

    rebase = boundary == model.basepoint
    remaining = tuple(b for b in model.boundaries if b != boundary)
    new_alpha = Alphabet(tuple(model.alphabet.names[i - 1] for i in keep))

    def new_table(phi: FreeGroupAut):
        imgs = []
        if rebase:
            # loops at the far point: x -> u^-1 phi(x) u where phi(z) = u z
            u = phi.images[zi - 1][:-1]
            ui = invert_word(u)
            for i in keep:
                imgs.append(subst(multiply(ui, phi.images[i - 1], u)))
        else:
            for i in keep:
                imgs.append(subst(phi.images[i - 1]))
        return FreeGroupAut(tuple(imgs))

    twists = {n: TwistGenerator(n, new_table(t.action), new_table(t.inverse), t.handedness)
              for n, t in model.twists.items()}
    ident = FreeGroupAut.identity(len(keep))
    if not aut_equal(twists[boundary].action, ident):
        raise CapError(f"twist about the capped boundary {boundary} did not become trivial")

    curves = {}
    for n, c in model.curves.items():
        w = cyclic_reduce(subst(c.word))
        h1 = tuple(abelianize(w, len(keep)))
        curves[n] = NamedCurve(n, w, h1, False)
    bwords = {b: subst(model.boundary_words[b]) for b in remaining}
    bclasses = [abelianize(w, len(keep)) for w in bwords.values()]
    curves = {n: NamedCurve(n, c.word, c.h1, _in_span(bclasses, c.h1)) for n, c in curves.items()}
    J = [[model.lattice.form[i - 1][j - 1] for j in keep] for i in keep]
    solve_for = {b: g for b, g in model.solve_for.items() if b in remaining}

    return SurfaceModel(
        name=f"sigma_{model.genus}_{len(remaining)}",
        genus=model.genus,
        boundaries=remaining,
        alphabet=new_alpha,
        rank=len(keep),
        connector=None,
        boundary_words=MappingProxyType(bwords),
        basepoint=remaining[0],
        solve_for=MappingProxyType(solve_for),
        lattice=hom.H1Lattice(tuple(tuple(r) for r in J)),
        curves=MappingProxyType(curves),
        arcs=MappingProxyType({}),
        twists=MappingProxyType(twists),
        intersections=model.intersections,
        connector_form=None,
        conventions=model.conventions,
    )


# -- closed surfaces (homology only) ---------------------------------------

@dataclass(frozen=True)
class HomologyModel:
    """Closed surface known only through H_1 and the classes of named curves."""

    name: str
    genus: int
    lattice: hom.H1Lattice
    classes: Mapping
    separating: Mapping

    def rep(self, word) -> list:
        return hom.symplectic_rep(self.lattice, self.classes, as_twist_word(word))

    def class_of(self, name: str) -> tuple:
        key = normalize_symbol(name)
        if key not in self.classes:
            raise UnknownSymbolError(name)
        return self.classes[key]

    def to_document(self) -> dict:
        return {
            "kind": "homology",
            "surface": {"genus": self.genus, "boundaries": [], "name": self.name},
            "intersection_form": [list(r) for r in self.lattice.form],
            "curves": [{"name": n, "h1": list(v), "separating": self.separating[n]}
                       for n, v in self.classes.items()],
        }


def cap_cylinder(model: SurfaceModel) -> HomologyModel:
    """Join the two boundary circles by an annulus (genus goes up by one).

    H_1 gains the class t of the connector closed up through the annulus;
    its pairings with the generators are the model's connector form.
    """
    if len(model.boundaries) != 2 or model.connector_form is None:
        raise CapError("cylinder capping needs two boundaries and a connector pairing")
    q = list(model.connector_form)
    J = [list(row) + [-q[i]] for i, row in enumerate(model.lattice.form)] + [q + [0]]
    lattice = hom.H1Lattice(tuple(tuple(row) for row in J))
    if not lattice.is_unimodular():
        raise CapError("closed-up lattice is not unimodular")
    classes = {n: tuple(c.h1) + (0,) for n, c in model.curves.items()}
    sep = {n: not any(v) for n, v in classes.items()}
    return HomologyModel(f"sigma_{model.genus + 1}_0", model.genus + 1, lattice,
                         MappingProxyType(classes), MappingProxyType(sep))


def stabilize(hmodel: HomologyModel, extra: int) -> HomologyModel:
    """Add ``extra`` standard handles orthogonal to all named classes."""
    if extra < 0:
        raise CapError("extra genus must be nonnegative")
    n = hmodel.lattice.rank
    m = n + 2 * extra
    J = [[0] * m for _ in range(m)]
    for i in range(n):
        for j in range(n):
            J[i][j] = hmodel.lattice.form[i][j]
    block = hom.standard_form(extra) if extra else []
    for i in range(2 * extra):
        for j in range(2 * extra):
            J[n + i][n + j] = block[i][j]
    classes = {k: tuple(v) + (0,) * (2 * extra) for k, v in hmodel.classes.items()}
    g = hmodel.genus + extra
    return HomologyModel(f"sigma_{g}_0", g, hom.H1Lattice(tuple(tuple(r) for r in J)),
                         MappingProxyType(classes), hmodel.separating)


def load_homology_model(document) -> HomologyModel:
    doc = _read_document(document)
    if doc.get("kind") != "homology":
        raise CurveSystemError("kind", "not a homology-only document")
    try:
        lattice = hom.H1Lattice(tuple(tuple(r) for r in doc["intersection_form"]))
    except hom.HomologyError as e:
        raise CurveSystemError("intersection-form", str(e)) from None
    classes, sep = {}, {}
    for c in doc["curves"]:
        name = normalize_symbol(c["name"])
        if len(c["h1"]) != lattice.rank:
            raise CurveSystemError("curve-h1", f"curve {name} has the wrong length")
        classes[name] = tuple(c["h1"])
        sep[name] = bool(c.get("separating", not any(c["h1"])))
        if sep[name] != (not any(classes[name])):
            raise CurveSystemError("separating", f"curve {name}: flag disagrees with class")
    surf = doc["surface"]
    return HomologyModel(surf.get("name", "closed"), int(surf["genus"]), lattice,
                         MappingProxyType(classes), MappingProxyType(sep))


def write_derived_models(data_dir: Path | None = None) -> list:
    """Regenerate the capped documents from the shipped two-boundary model."""
    data_dir = data_dir or DATA_DIR
    base = load_shipped("sigma_2_2", data_dir)
    capped = cap_disk(base, "delta0")
    p1 = save_model(capped, data_dir / "sigma_2_1.json")
    closed = cap_cylinder(base)
    p2 = data_dir / "sigma_3_0.json"
    p2.write_text(json.dumps(closed.to_document(), indent=1, ensure_ascii=False) + "\n", encoding="utf-8")
    return [p1, p2]


if __name__ == "__main__":
    for p in write_derived_models():
        print(p)
