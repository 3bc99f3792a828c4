"""Geography of Lefschetz fibrations: invariants, constraints, enumeration.

A candidate is a triple (n, s, sigma): n nonseparating and s separating
singular fibers, and a signature.  A candidate survives when every
applicable constraint passes; inapplicable constraints never reject.

Constraint ids:

* ``C1-lower``, ``C1-upper``: the signature window over the torus.
* ``C1-sharp``: the window before rounding the upper bound; reported as a
  strengthening and only enforced on request.
* ``chern-range``: 2(g-1)(h-1) <= c1^2 <= 5 c2 for base genus >= 2.
* ``b2-range``: |sigma| <= b2 with b1 <= 2g + 2h; keeps every search finite.
* ``C2``: 4 divides sigma + chi.
* ``C3``: s <= 6(3g-1)(h-1) + 5n.
* ``abelianization``: the word must vanish in H_1 of the mapping class group.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field

CONSTRAINT_IDS = ("C1-lower", "C1-upper", "C1-sharp", "chern-range", "b2-range", "C2", "C3", "abelianization")


class DomainError(ValueError):
    pass


def _check_domain(g: int, h: int, k: int | None = None):
    if g < 1:
        raise DomainError(f"fiber genus must be >= 1, got {g}")
    if h < 0:
        raise DomainError(f"base genus must be >= 0, got {h}")
    if k is not None and k < 1:
        raise DomainError(f"need at least one singular fiber, got k={k}")


@dataclass(frozen=True)
class FibrationDescriptor:
    g: int
    h: int
    n: int
    s: int
    factorization: object = None   # optional, with a census to compare

    def __post_init__(self):
        _check_domain(self.g, self.h, self.n + self.s)
        if self.n < 0 or self.s < 0:
            raise DomainError("fiber counts must be nonnegative")
        if self.factorization is not None:
            census = getattr(self.factorization, "census", None)
            if census is not None and tuple(census) != (self.n, self.s):
                raise DomainError(f"factorization census {tuple(census)} != {(self.n, self.s)}")

    @property
    def k(self) -> int:
        return self.n + self.s


def euler_char(g: int, h: int, k: int) -> int:
    _check_domain(g, h, k)
    return 4 * (g - 1) * (h - 1) + k


def chern_numbers(chi: int, sigma) -> tuple:
    """(c1^2, c2) = (3 sigma + 2 chi, chi)."""
    return 3 * sigma + 2 * chi, chi


@dataclass(frozen=True)
class SigmaInterval:
    lower: int | None
    upper: int | None
    sharp_upper: int | None
    notes: tuple = ()

    def contains(self, sigma: int) -> bool:
        return ((self.lower is None or sigma >= self.lower)
                and (self.upper is None or sigma <= self.upper))


def sigma_interval(g: int, h: int, n: int, s: int) -> SigmaInterval:
    k = n + s
    _check_domain(g, h, k)
    chi = euler_char(g, h, k)
    notes = []
    if h == 1:
        if g >= 2:
            lower = math.ceil(-2 * k / 3)
        else:
            lower = None
            notes.append("C1-lower inapplicable: needs fiber genus >= 2")
        if n > 0:
            upper = n - s - 1
            sharp = math.floor(k - 2 * s - 2 * n / (2 * g + 1))
        else:
            upper = sharp = None
            notes.append("C1-upper inapplicable: needs n > 0")
        return SigmaInterval(lower, upper, sharp, tuple(notes))
    if h >= 2:
        # 2(g-1)(h-1) <= 3 sigma + 2 chi <= 5 chi
        lower = math.ceil((2 * (g - 1) * (h - 1) - 2 * chi) / 3)
        upper = math.floor(chi)
        notes.append("chern-range bounds used in place of C1")
        return SigmaInterval(lower, upper, None, tuple(notes))
    notes.append("no signature window over the sphere; b2-range bounds the search")
    return SigmaInterval(None, None, None, tuple(notes))


def b2_bound(g: int, h: int, k: int) -> int:
    """Upper bound on b2 from b1 <= 2g + 2h."""
    return euler_char(g, h, k) - 2 + 2 * (2 * g + 2 * h)


def constraint_C2(sigma: int, chi: int) -> bool:
    return (sigma + chi) % 4 == 0


def constraint_C3(g: int, h: int, n: int, s: int) -> bool:
    if h < 1:
        raise DomainError("C3 needs base genus >= 1")
    return s <= 6 * (3 * g - 1) * (h - 1) + 5 * n


@dataclass(frozen=True)
class Congruence:
    holds: bool
    applicable: bool
    rule: str


def abelianization_congruence(g: int, n: int, s: int) -> Congruence:
    """H_1 of the genus-g mapping class group: Z/12, Z/10, then trivial."""
    if g == 1:
        return Congruence(n % 12 == 0 and s == 0, True, "n = 0 mod 12, s = 0")
    if g == 2:
        return Congruence((n + 2 * s) % 10 == 0, True, "n + 2s = 0 mod 10")
    return Congruence(True, False, "trivial abelianization")


@dataclass(frozen=True)
class ConstraintVerdict:
    id: str
    applicable: bool
    passed: bool
    witness: dict = field(default_factory=dict)

    @property
    def rejects(self) -> bool:
        return self.applicable and not self.passed


@dataclass(frozen=True)
class Candidate:
    n: int
    s: int
    sigma: int
    verdicts: tuple

    @property
    def survives(self) -> bool:
        return not any(v.rejects for v in self.verdicts)

    def as_tuple(self) -> tuple:
        return (self.n, self.s, self.sigma)


@dataclass(frozen=True)
class FeasibilityReport:
    g: int
    h: int
    k: int
    pairs: tuple          # (n, s, [elimination notes]) for pairs with no candidate sigma
    candidates: tuple
    disabled: tuple = ()

    @property
    def survivors(self) -> list:
        return [c.as_tuple() for c in self.candidates if c.survives]

    def to_json(self) -> dict:
        return {
            "input": {"g": self.g, "h": self.h, "k": self.k, "disabled": list(self.disabled)},
            "tuples": [{"n": c.n, "s": c.s, "sigma": c.sigma, "survives": c.survives,
                        "verdicts": [asdict(v) for v in c.verdicts]} for c in self.candidates],
            "eliminated_pairs": [{"n": n, "s": s, "reason": r} for n, s, r in self.pairs],
            "survivors": [list(t) for t in self.survivors],
            "provenance": {
                "gating": "C1-lower needs g >= 2; C1-upper needs n > 0; C3 needs h >= 1",
                "abelianization": "Z/12 for g = 1 and Z/10 for g = 2 (all base genera)",
            },
        }

    @classmethod
    def from_json(cls, data) -> "FeasibilityReport":
        inp = data["input"]
        cands = tuple(Candidate(t["n"], t["s"], t["sigma"],
                                tuple(ConstraintVerdict(v["id"], v["applicable"], v["passed"], v["witness"])
                                      for v in t["verdicts"]))
                      for t in data["tuples"])
        pairs = tuple((p["n"], p["s"], p["reason"]) for p in data["eliminated_pairs"])
        return cls(inp["g"], inp["h"], inp["k"], pairs, cands, tuple(inp.get("disabled", ())))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1)


def _verdicts(g, h, n, s, sigma, iv: SigmaInterval, enforce_sharp: bool) -> list:
    k = n + s
    chi = euler_char(g, h, k)
    c1sq, c2 = chern_numbers(chi, sigma)
    out = []
    if h == 1:
        out.append(ConstraintVerdict("C1-lower", iv.lower is not None,
                                     iv.lower is None or sigma >= iv.lower, {"lower": iv.lower}))
        out.append(ConstraintVerdict("C1-upper", iv.upper is not None,
                                     iv.upper is None or sigma <= iv.upper, {"upper": iv.upper}))
        out.append(ConstraintVerdict("C1-sharp", enforce_sharp and iv.sharp_upper is not None,
                                     iv.sharp_upper is None or sigma <= iv.sharp_upper,
                                     {"upper": iv.sharp_upper}))
    out.append(ConstraintVerdict("chern-range", h >= 2,
                                 2 * (g - 1) * (h - 1) <= c1sq <= 5 * c2, {"c1^2": c1sq, "c2": c2}))
    b2 = b2_bound(g, h, k)
    out.append(ConstraintVerdict("b2-range", True, abs(sigma) <= b2, {"b2_max": b2}))
    out.append(ConstraintVerdict("C2", True, constraint_C2(sigma, chi), {"sigma+chi": sigma + chi}))
    out.append(ConstraintVerdict("C3", h >= 1, h < 1 or constraint_C3(g, h, n, s),
                                 {"s": s, "bound": 6 * (3 * g - 1) * (h - 1) + 5 * n if h >= 1 else None}))
    ab = abelianization_congruence(g, n, s)
    out.append(ConstraintVerdict("abelianization", ab.applicable, ab.holds, {"rule": ab.rule}))
    return out


def feasible_tuples(g: int, h: int, k: int, disable: tuple = (), enforce_sharp: bool = False) -> FeasibilityReport:
    """All (n, s, sigma) with n + s = k passing every applicable, enabled constraint.

    Each integer sigma in the window (intersected with the b2 range) is a
    candidate; constraints named in ``disable`` are reported as inapplicable.
    """
    _check_domain(g, h, k)
    unknown = set(disable) - set(CONSTRAINT_IDS)
    if unknown:
        raise DomainError(f"unknown constraint ids {sorted(unknown)}")
    cands, pairs = [], []
    b2 = b2_bound(g, h, k)
    for n in range(k, -1, -1):
        s = k - n
        iv = sigma_interval(g, h, n, s)
        lo, hi = -b2, b2
        if "C1-lower" not in disable and "chern-range" not in disable and iv.lower is not None:
            lo = max(lo, iv.lower)
        if "C1-upper" not in disable and "chern-range" not in disable and iv.upper is not None:
            hi = min(hi, iv.upper)
        if "b2-range" in disable:
            lo = iv.lower if iv.lower is not None and "C1-lower" not in disable else -b2 - 4 * k
            hi = iv.upper if iv.upper is not None and "C1-upper" not in disable else b2 + 4 * k
        found = False
        for sigma in range(lo, hi + 1):
            vs = tuple(ConstraintVerdict(v.id, v.applicable and v.id not in disable, v.passed, v.witness)
                       for v in _verdicts(g, h, n, s, sigma, iv, enforce_sharp))
            cands.append(Candidate(n, s, sigma, vs))
            found = True
        if not found:
            pairs.append((n, s, f"empty signature window [{lo}, {hi}]"))
    return FeasibilityReport(g, h, k, tuple(pairs), tuple(cands), tuple(disable))


def min_feasible_k(g: int, h: int = 1, k_max: int = 100) -> int | None:
    if k_max < 1:
        raise DomainError("k_max must be >= 1")
    for k in range(1, k_max + 1):
        if feasible_tuples(g, h, k).survivors:
            return k
    return None


def pullback_scale(d: FibrationDescriptor, m: int) -> dict:
    """Invariants of the pullback along an m-fold cover of the torus."""
    if m < 1:
        raise DomainError("cover degree must be >= 1")
    if d.h != 1:
        raise DomainError("pullback scaling is for fibrations over the torus")
    iv = sigma_interval(d.g, 1, d.n, d.s)
    scale = (lambda x: None if x is None else m * x)
    return {"chi": m * euler_char(d.g, 1, d.k), "k": m * d.k, "n": m * d.n, "s": m * d.s,
            "sigma_lower": scale(iv.lower), "sigma_upper": scale(iv.upper),
            "b1_max": 2 * d.g + 2}


# -- the N(g, 1) table -------------------------------------------------------

@dataclass(frozen=True)
class CitedBound:
    g_min: int
    g_max: int | None
    kind: str          # "upper" | "lower" | "exact"
    value: int
    source: str

    def covers(self, g: int) -> bool:
        return g >= self.g_min and (self.g_max is None or g <= self.g_max)


CITED_BOUNDS = (
    CitedBound(3, None, "upper", 6, "Hamada"),
    CitedBound(5, None, "upper", 4, "Hamada"),
    CitedBound(1, 1, "exact", 12, "Matsumoto"),
    CitedBound(2, 2, "upper", 7, "earlier construction"),
    CitedBound(19, 19, "exact", 3, "Cartwright-Koziarz-Yeung"),
)
# Verified in this package: the genus-3 five-fiber factorization, stabilized.
CONSTRUCTION = CitedBound(3, None, "upper", 5, "construction (relations catalog)")


@dataclass(frozen=True)
class BoundRow:
    g: int
    lower: int | None
    upper: int | None
    lower_source: str
    upper_source: str

    def interval(self) -> list:
        return [self.lower, self.upper]


def n_bounds_table(g_max: int, k_max: int = 100) -> list:
    if g_max < 1:
        raise DomainError("g_max must be >= 1")
    rows = []
    for g in range(1, g_max + 1):
        lower = min_feasible_k(g, 1, k_max)
        lsrc = "enumeration"
        uppers = [b for b in CITED_BOUNDS + (CONSTRUCTION,) if b.kind in ("upper", "exact") and b.covers(g)]
        best = min(uppers, key=lambda b: b.value) if uppers else None
        upper, usrc = (best.value, best.source) if best else (None, "none")
        exact = next((b for b in CITED_BOUNDS if b.kind == "exact" and b.covers(g)), None)
        if exact is not None:
            if lower is not None and lower > exact.value:
                raise DomainError(f"enumeration lower bound {lower} exceeds cited value at g={g}")
            lower, lsrc = exact.value, f"{exact.source} (enumeration gives {lower})" if lower != exact.value \
                else f"enumeration; {exact.source}"
            upper, usrc = exact.value, exact.source
        elif lower is not None and upper is not None and lower == upper:
            usrc = f"{usrc}; matches enumeration"
        rows.append(BoundRow(g, lower, upper, lsrc, usrc))
    return rows
