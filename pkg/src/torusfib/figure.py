"""Planar transcription of the genus-2 surface with two boundary circles.

The surface is the double of the region ``P = [0,10] x [0,4]`` minus two
square holes, glued along the top edge, the bottom edge and both hole
boundaries.  The left side doubles to the boundary circle ``delta0`` and
the right side to ``delta2``.  The front sheet ``F`` carries the planar
orientation, the back sheet ``B`` the opposite one.

Five cut arcs reduce the surface to a disk:

* ``al``, ``be``: the top and bottom folds (``F -> B`` counts positive),
* ``u1``, ``u2``: doubled segments from a side to a hole, at height 2,
* ``w``: a front-only arc from ``delta0`` around hole 1 back to ``delta0``.

A path's pi_1 word is its signed sequence of cut crossings.  Dehn twists
are computed by surgery: at every crossing with the twist curve the path
detours once around it, turning right for a positive (right-handed) twist.
Everything uses exact rational arithmetic.

Running ``python -m torusfib.figure`` regenerates ``data/sigma_2_2.json``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

F = Fraction
WIDTH, HEIGHT = F(10), F(4)
HOLES = {
    "h1": (F(5, 2), F(7, 2), F(3, 2), F(5, 2)),
    "h2": (F(13, 2), F(15, 2), F(3, 2), F(5, 2)),
}
SHEET_SIGN = {"F": 1, "B": -1}

GENERATORS = ("al", "be", "u1", "u2", "w")
CONNECTOR = "z"


class FigureError(ValueError):
    pass


def P(x, y, sheet):
    return (F(x), F(y), sheet)


# Polyline cuts (planar coordinates, sheets they live on).
POLY_CUTS = {
    "u1": ([(F(0), F(2)), (F(5, 2), F(2))], "FB"),
    "u2": ([(F(15, 2), F(2)), (F(10), F(2))], "FB"),
    "w": ([(F(0), F(4, 5)), (F(19, 5), F(4, 5)), (F(19, 5), F(16, 5)), (F(0), F(16, 5))], "F"),
}
CUT_FOLD_POINTS = {(F(5, 2), F(2)), (F(15, 2), F(2))}

BASEPOINT = P(0, "3.6", "F")
BASEPOINT2 = P(10, "3.6", "F")


def _d(*pts):
    return [P(*p) for p in pts]


def _closed(*pts):
    return _d(*pts)


# Closed curves of the figure.  Doubled curves pass through folds as a pair
# of consecutive points with equal coordinates and different sheets.
CURVES = {
    "1a": _closed(("3.1", "2.5", "F"), ("3.1", 4, "F"), ("3.1", 4, "B"), ("3.1", "2.5", "B")),
    "1b": _closed(("3.1", "1.5", "F"), ("3.1", 0, "F"), ("3.1", 0, "B"), ("3.1", "1.5", "B")),
    "2": _closed(("2.2", "1.1", "F"), ("3.7", "1.1", "F"), ("3.7", "2.9", "F"), ("2.2", "2.9", "F")),
    "3": _closed(("3.5", 2, "F"), ("6.5", 2, "F"), ("6.5", 2, "B"), ("3.5", 2, "B")),
    "4": _closed(("6.2", "1.1", "F"), ("7.8", "1.1", "F"), ("7.8", "2.9", "F"), ("6.2", "2.9", "F")),
    "c": _closed(("6.9", "2.5", "F"), ("6.9", 4, "F"), ("6.9", 4, "B"), ("6.9", "2.5", "B")),
    "d": _closed(("6.9", "1.5", "F"), ("6.9", 0, "F"), ("6.9", 0, "B"), ("6.9", "1.5", "B")),
    "delta0": _closed(("0.1", 4, "F"), ("0.1", 0, "F"), ("0.1", 0, "B"), ("0.1", 4, "B")),
    "delta1": _closed((5, 0, "F"), (5, 4, "F"), (5, 4, "B"), (5, 0, "B")),
    "delta2": _closed(("9.9", 0, "F"), ("9.9", 4, "F"), ("9.9", 4, "B"), ("9.9", 0, "B")),
    "delta3": _closed(
        ("3.5", "2.3", "F"), ("4.3", "3.5", "F"), ("8.5", "3.5", "F"), ("8.5", "0.5", "F"),
        ("4.3", "0.5", "F"), ("3.5", "1.7", "F"),
        ("3.5", "1.7", "B"), ("4.3", "0.5", "B"), ("8.5", "0.5", "B"), ("8.5", "3.5", "B"),
        ("4.3", "3.5", "B"), ("3.5", "2.3", "B"),
    ),
}

# Based loops dual to the cuts, each crossing exactly one cut once.
_RETURN = [("6.8", "2.5", "F"), ("6.8", "3.7", "F"), (0, "3.7", "F"), (0, "3.6", "F")]
LOOPS = {
    "al": _d((0, "3.6", "F"), ("0.5", "3.6", "F"), ("0.5", 4, "F"), ("0.5", 4, "B"),
             ("0.5", "3.9", "B"), ("6.7", "3.9", "B"), ("6.7", "2.5", "B"), ("6.7", "2.5", "F"),
             ("6.7", "3.65", "F"), (0, "3.65", "F"), (0, "3.6", "F")),
    "be": _d((0, "3.6", "F"), ("4.5", "3.6", "F"), ("4.5", 0, "F"), ("4.5", 0, "B"),
             ("4.5", "0.3", "B"), ("6.7", "0.3", "B"), ("6.7", "1.5", "B"), ("6.7", "1.5", "F"),
             ("6.7", "1.3", "F"), ("6.0", "1.3", "F"), ("6.0", "3.7", "F"), (0, "3.7", "F"),
             (0, "3.6", "F")),
    "u1": _d((0, "3.6", "F"), ("6.6", "3.6", "F"), ("6.6", "2.5", "F"), ("6.6", "2.5", "B"),
             ("6.4", "2.7", "B"), ("5.5", 1, "B"), (1, 1, "B"), (1, 3, "B"), ("6.4", 3, "B"),
             ("6.8", "2.5", "B"), *_RETURN),
    "u2": _d((0, "3.6", "F"), ("6.6", "3.6", "F"), ("6.6", "2.5", "F"), ("6.6", "2.5", "B"),
             ("6.3", "2.6", "B"), ("6.3", 1, "B"), (9, 1, "B"), (9, 3, "B"), ("6.8", 3, "B"),
             ("6.8", "2.5", "B"), *_RETURN),
    "w": _d((0, "3.6", "F"), ("1.5", "3.6", "F"), ("1.5", 3, "F"), ("2.7", "2.5", "F"),
            ("2.7", "2.5", "B"), ("2.7", 3, "B"), ("6.4", 3, "B"), ("6.8", "2.5", "B"), *_RETURN),
}
CONNECTOR_PATH = _d((0, "3.6", "F"), (10, "3.6", "F"))

# Proper arcs delta0 -> delta2, pushed off their folds into the front sheet and
# slid along the boundary to the basepoints.
ARCS = {
    "alpha": _d((0, "3.6", "F"), ("0.05", "3.95", "F"), ("9.95", "3.95", "F"), (10, "3.6", "F")),
    "beta": _d((0, "3.6", "F"), ("0.02", "3.5", "F"), ("0.02", "0.05", "F"), ("9.98", "0.05", "F"),
               ("9.98", "3.5", "F"), (10, "3.6", "F")),
}

# Whiskers from the basepoints into the boundary-parallel curves.
BOUNDARY_LOOPS = {
    "delta0": (_d((0, "3.6", "F"), ("0.2", "3.6", "F")), "delta0"),
    "delta2": (_d((10, "3.6", "F"), ("9.8", "3.6", "F")), "delta2"),
}

NONSEP_HINT = ("1a", "1b", "2", "3", "4", "c", "d")


# ---------------------------------------------------------------- geometry

def _cross(ax, ay, bx, by):
    return ax * by - ay * bx


def _on_fold(x, y):
    if 0 < x < WIDTH and y in (0, HEIGHT):
        return "top" if y == HEIGHT else "bottom"
    for name, (x0, x1, y0, y1) in HOLES.items():
        on_v = x in (x0, x1) and y0 <= y <= y1
        on_h = y in (y0, y1) and x0 <= x <= x1
        if on_v or on_h:
            return name
    return None


def _inside_region(x, y):
    if not (0 <= x <= WIDTH and 0 <= y <= HEIGHT):
        return False
    for x0, x1, y0, y1 in HOLES.values():
        if x0 < x < x1 and y0 < y < y1:
            return False
    return True


def _segment_hits_hole(p, q):
    """Liang-Barsky: does the open segment pq meet an open hole square?"""
    (px, py), (qx, qy) = p, q
    dx, dy = qx - px, qy - py
    for x0, x1, y0, y1 in HOLES.values():
        t0, t1 = F(0), F(1)
        ok = True
        for pk, qk in ((-dx, px - x0), (dx, x1 - px), (-dy, py - y0), (dy, y1 - py)):
            if pk == 0:
                if qk <= 0:
                    ok = False
                    break
            else:
                r = qk / pk
                if pk < 0:
                    t0 = max(t0, r)
                else:
                    t1 = min(t1, r)
        if ok and t0 < t1:
            return True
    return False


def _intersect(p, q, a, b):
    """Parameters (t, u) of a proper crossing of segments pq and ab, else None.

    Raises on degenerate contact so that every drawing stays generic.
    """
    rx, ry = q[0] - p[0], q[1] - p[1]
    sx, sy = b[0] - a[0], b[1] - a[1]
    den = _cross(rx, ry, sx, sy)
    wx, wy = a[0] - p[0], a[1] - p[1]
    if den == 0:
        if _cross(wx, wy, rx, ry) == 0:
            # collinear: overlapping is degenerate, disjoint is fine
            rr = rx * rx + ry * ry
            t_a = (wx * rx + wy * ry) / rr
            t_b = ((b[0] - p[0]) * rx + (b[1] - p[1]) * ry) / rr
            lo, hi = min(t_a, t_b), max(t_a, t_b)
            if hi >= 0 and lo <= 1:
                raise FigureError(f"collinear overlap between {p}-{q} and {a}-{b}")
        return None
    t = _cross(wx, wy, sx, sy) / den
    u = _cross(wx, wy, rx, ry) / den
    if 0 < t < 1 and 0 < u < 1:
        return t, u
    if 0 <= t <= 1 and 0 <= u <= 1:
        raise FigureError(f"non-generic contact between {p}-{q} and {a}-{b}")
    return None


@dataclass(frozen=True)
class Piece:
    """A straight segment inside one sheet, or a fold transition."""

    start: tuple
    end: tuple

    @property
    def is_transition(self):
        return self.start[2] != self.end[2]


def pieces(points, closed):
    pts = list(points)
    if closed:
        pts = pts + [pts[0]]
    out = []
    for p, q in zip(pts, pts[1:]):
        if p[2] != q[2]:
            if (p[0], p[1]) != (q[0], q[1]) or _on_fold(p[0], p[1]) is None:
                raise FigureError(f"sheet change away from a fold at {p} -> {q}")
            if (p[0], p[1]) in CUT_FOLD_POINTS:
                raise FigureError(f"fold transition through a cut endpoint at {p}")
        else:
            if (p[0], p[1]) == (q[0], q[1]):
                raise FigureError(f"zero-length segment at {p}")
            for r in (p, q):
                if not _inside_region(r[0], r[1]):
                    raise FigureError(f"point {r} outside the region")
            if _segment_hits_hole((p[0], p[1]), (q[0], q[1])):
                raise FigureError(f"segment {p}-{q} enters a hole")
        out.append(Piece(p, q))
    return out


def _cut_events(pc: Piece):
    """Signed cut crossings on one piece, as (param, generator index, sign)."""
    p, q = pc.start, pc.end
    if pc.is_transition:
        fold = _on_fold(p[0], p[1])
        if fold in ("top", "bottom"):
            sign = 1 if p[2] == "F" else -1
            return [(F(1, 2), GENERATORS.index("al" if fold == "top" else "be"), sign)]
        return []
    ev = []
    for name, (poly, sheets) in POLY_CUTS.items():
        if p[2] not in sheets:
            continue
        for a, b in zip(poly, poly[1:]):
            hit = _intersect((p[0], p[1]), (q[0], q[1]), a, b)
            if hit is None:
                continue
            t, _ = hit
            c = _cross(b[0] - a[0], b[1] - a[1], q[0] - p[0], q[1] - p[1])
            ev.append((t, GENERATORS.index(name), 1 if c > 0 else -1))
    return ev


def _letters(events):
    return [(g + 1) * s for _, g, s in sorted(events)]


class Polyline:
    def __init__(self, points, closed):
        self.points = points
        self.closed = closed
        self.pieces = pieces(points, closed)
        self.cut_events = [sorted(_cut_events(pc)) for pc in self.pieces]

    def word(self):
        out = []
        for evs in self.cut_events:
            out.extend((g + 1) * s for _, g, s in evs)
        return out

    def crossings_with(self, other: "Polyline"):
        """Crossings as (i, t, j, u, sheet, self_dir, other_dir)."""
        res = []
        for i, a in enumerate(self.pieces):
            for j, b in enumerate(other.pieces):
                if a.is_transition and b.is_transition:
                    if (a.start[:2]) == (b.start[:2]):
                        raise FigureError(f"curves share a fold transition at {a.start}")
                    continue
                if a.is_transition or b.is_transition:
                    continue
                if a.start[2] != b.start[2]:
                    continue
                hit = _intersect(a.start[:2], a.end[:2], b.start[:2], b.end[:2])
                if hit is None:
                    continue
                t, u = hit
                va = (a.end[0] - a.start[0], a.end[1] - a.start[1])
                vb = (b.end[0] - b.start[0], b.end[1] - b.start[1])
                res.append((i, t, j, u, a.start[2], va, vb))
        return res

    def loop_from(self, j, u, forward):
        """Cut letters met going once around this closed curve from (j, u)."""
        n = len(self.pieces)
        seq = [(g + 1) * s for t, g, s in self.cut_events[j] if t > u]
        for k in range(1, n):
            seq.extend((g + 1) * s for t, g, s in self.cut_events[(j + k) % n])
        seq.extend((g + 1) * s for t, g, s in self.cut_events[j] if t < u)
        if forward:
            return seq
        return [-x for x in reversed(seq)]


def twist_path(path: Polyline, curve: Polyline, power: int = 1):
    """Cut-letter word of the image of ``path`` under the twist about ``curve``.

    ``power`` is +1 (right-handed: turn right) or -1.
    """
    hits = path.crossings_with(curve)
    by_piece = {}
    for i, t, j, u, sheet, va, vb in hits:
        side = SHEET_SIGN[sheet] * _cross(va[0], va[1], vb[0], vb[1])
        # side < 0: the curve's direction points to the right of the path
        forward = (side < 0) == (power > 0)
        by_piece.setdefault(i, []).append((t, "curve", (j, u, forward)))
    out = []
    for i, evs in enumerate(path.cut_events):
        merged = [(t, "cut", (g, s)) for t, g, s in evs] + by_piece.get(i, [])
        merged.sort(key=lambda e: e[0])
        for t, kind, data in merged:
            if kind == "cut":
                out.append((data[0] + 1) * data[1])
            else:
                out.extend(curve.loop_from(*data))
    return out


def algebraic_intersection(a: Polyline, b: Polyline) -> int:
    """Sum over crossings of +1 when b crosses a from a's right... see module notes.

    Sign convention: the transvection of b acts as x -> x + <x, b> b.
    """
    total = 0
    for i, t, j, u, sheet, va, vb in a.crossings_with(b):
        side = SHEET_SIGN[sheet] * _cross(va[0], va[1], vb[0], vb[1])
        total += 1 if side < 0 else -1
    return total


def geometric_count(a: Polyline, b: Polyline) -> int:
    return len(a.crossings_with(b))


# ---------------------------------------------------------------- document

def _fmt(word):
    from .words import Alphabet, reduce
    names = GENERATORS + (CONNECTOR,)
    return Alphabet(names).format(reduce(word))


def _reduced(word):
    from .words import reduce
    return list(reduce(word))


def build_document() -> dict:
    from .words import cyclic_reduce, abelianize

    loops = {g: Polyline(LOOPS[g], closed=False) for g in GENERATORS}
    for k, (g, lp) in enumerate(loops.items()):
        got = _reduced(lp.word())
        if got != [k + 1]:
            raise FigureError(f"dual loop {g} reads {got}, expected generator {k + 1}")
    conn = Polyline(CONNECTOR_PATH, closed=False)
    if _reduced(conn.word()):
        raise FigureError("connector must not cross cuts")
    curves = {name: Polyline(pts, closed=True) for name, pts in CURVES.items()}
    zi = len(GENERATORS) + 1

    def boundary_word(name):
        whisker, cname = BOUNDARY_LOOPS[name]
        wp = Polyline(whisker, closed=False)
        (i, t, j, u, *_), = wp.crossings_with(curves[cname])
        return _reduced(wp.word() + curves[cname].loop_from(j, u, True) + [-x for x in reversed(wp.word())])

    d0 = boundary_word("delta0")
    d2 = boundary_word("delta2")

    doc_curves = []
    h1 = {}
    for name, c in curves.items():
        w = list(cyclic_reduce(c.word()))
        h1[name] = abelianize(w, len(GENERATORS))
        doc_curves.append({"name": name, "word": _fmt(w), "h1": h1[name]})

    twists = []
    for name, c in curves.items():
        entry = {"curve": name}
        for key, pw in (("images", 1), ("inverse_images", -1)):
            imgs = {g: _fmt(twist_path(loops[g], c, pw)) for g in GENERATORS}
            imgs[CONNECTOR] = _fmt(twist_path(conn, c, pw) + [zi])
            entry[key] = imgs
        twists.append(entry)

    names = list(curves)
    inters = []
    pair_alg = {}
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            inters.append({"a": a, "b": b, "count": geometric_count(curves[a], curves[b])})
            pair_alg[(a, b)] = algebraic_intersection(curves[a], curves[b])

    J = _solve_form(names, h1, pair_alg)

    arcs = []
    for name, pts in ARCS.items():
        arcs.append({"name": name, "word": _fmt(Polyline(pts, closed=False).word() + [zi])})

    # Lefschetz pairing of each curve with the connector, used when the two
    # boundary circles are joined by a cylinder.
    connector_pairing = {n: algebraic_intersection(conn, c) for n, c in curves.items()}
    connector_form = _solve_functional(h1, connector_pairing)

    return {
        "surface": {"genus": 2, "boundaries": ["delta0", "delta2"], "name": "sigma_2_2"},
        "conventions": {
            "composition": "functional: in 'a b' the twist b is applied first",
            "twist": "right-handed: a crossing path turns right; front sheet carries the planar orientation",
            "transvection": "T_c(x) = x + <x,c> c",
        },
        "pi1": {
            "generators": list(GENERATORS),
            "connector": CONNECTOR,
            "boundary_words": {
                "delta0": {"word": _fmt(d0), "solve_for": "al", "basepoint": True},
                "delta2": {"word": _fmt(d2), "solve_for": "al", "basepoint": False},
            },
        },
        "intersection_form": J,
        "connector_pairing": connector_pairing,
        "connector_form": connector_form,
        "curves": doc_curves,
        "arcs": arcs,
        "twists": twists,
        "intersections": inters,
    }


def _solve_form(names, h1, pair_alg):
    """Skew form J on generator coordinates with h_a^T J h_b = <a, b>."""
    import sympy

    n = len(GENERATORS)
    unknowns = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rows, rhs = [], []
    for (a, b), val in pair_alg.items():
        ha, hb = h1[a], h1[b]
        rows.append([ha[i] * hb[j] - ha[j] * hb[i] for i, j in unknowns])
        rhs.append(val)
    A = sympy.Matrix(rows)
    bvec = sympy.Matrix(rhs)
    sol, params = A.gauss_jordan_solve(bvec)
    if params.shape[0]:
        raise FigureError("curve classes do not determine the intersection form")
    J = [[0] * n for _ in range(n)]
    for (i, j), v in zip(unknowns, sol):
        if not v.is_integer:
            raise FigureError("non-integral intersection form")
        J[i][j] = int(v)
        J[j][i] = -int(v)
    return J


def _solve_functional(h1, values):
    """Integer row q with q . h1[c] = values[c] for every curve c."""
    import sympy

    names = list(values)
    A = sympy.Matrix([h1[n] for n in names])
    sol, params = A.gauss_jordan_solve(sympy.Matrix([values[n] for n in names]))
    if params.shape[0] or not all(v.is_integer for v in sol):
        raise FigureError("connector pairing is not determined by the curve classes")
    return [int(v) for v in sol]


def write_document(path: Path | None = None) -> Path:
    path = path or Path(__file__).parent / "data" / "sigma_2_2.json"
    path.write_text(json.dumps(build_document(), indent=1) + "\n", encoding="utf-8")
    return path


if __name__ == "__main__":
    print(write_document())
