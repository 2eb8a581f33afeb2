"""Taxonomy of rational parameters and the exact density prediction table.

A parameter t (excluding 0, +-1, +-2) is classified by the square class
of delta = t**2 - 4 (reducible / circular / cubic), by the r = 2
non-genericity types A and B, by r-primitivity (does C_r(x) = t have a
rational root) and by the stronger primitivity notions that also require
the associate values to be primitive.  Each supported class comes with an
exact rational density sequence for the partition by the r-adic valuation
of the index.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Optional

from .chebyshev import cheb_c_exact
from .errors import ExcludedParameter
from .exactnum import divisors, is_r_scaled_square, is_square, rth_root

_EXCLUDED = {Fraction(0), Fraction(1), Fraction(-1), Fraction(2), Fraction(-2)}
_DEFAULT_RS = (2, 3, 5, 7, 11, 13)

TOWER_HALVING_CAP = 8     # circular tower recognition depth
SHIFT_RECURSION_CAP = 4   # non-primitive root-shift depth


class Genericity(Enum):
    GENERIC = "generic"
    PLUS_SQUARE = "plus-square"    # r = 1 mod 4 and t**2 - 4 = r*b**2
    MINUS_SQUARE = "minus-square"  # r = 3 mod 4 and t**2 - 4 = -r*b**2


@dataclass(frozen=True)
class RFacts:
    primitive: bool
    genericity: Genericity
    scale_root: Optional[Fraction] = None  # b in t**2 - 4 = +-r*b**2


@dataclass
class ParamClass:
    """Full classification record of a rational parameter."""

    t: Fraction
    excluded: bool = False
    reducible: bool = False
    reducible_witness: Optional[Fraction] = None   # a with t**2 - 4 = a**2
    circular: bool = False
    circular_associate: Optional[Fraction] = None  # w with t**2 + w**2 = 4
    cubic: bool = False
    cubic_b: Optional[Fraction] = None             # b with t**2 - 4 = -3*b**2
    cubic_associates: Optional[tuple] = None       # ((-t+3b)/2, (-t-3b)/2)
    type_a: bool = False
    type_b: bool = False
    twin_primitive: bool = False
    cubic_primitive: bool = False
    circular_primitive: bool = False
    two_generic: bool = False
    per_r: dict = field(default_factory=dict)


def _is_prime(r: int) -> bool:
    if r < 2:
        return False
    i = 2
    while i * i <= r:
        if r % i == 0:
            return False
        i += 1
    return True


def cheb_preimages(r: int, t) -> list:
    """Rational solutions x of C_r(x) = t, for prime r.

    For r = 2 this is the square test on 2 + t.  For odd r a reduced root
    c/d forces den(t) = d**r (the numerator of C_r(c/d) is prime to d) and
    c | num(t) (C_r has zero constant term), so candidates are finite.
    """
    t = Fraction(t)
    if r == 2:
        sq = is_square(t + 2)
        if not sq:
            return []
        return sorted({sq.root, -sq.root})
    if t.numerator == 0:
        return []
    d = 1 if t.denominator == 1 else rth_root(t.denominator, r)
    if d is None:
        return []
    roots = set()
    for c in divisors(t.numerator):
        if gcd(c, d) != 1:
            continue
        for x in (Fraction(c, d), Fraction(-c, d)):
            if cheb_c_exact(r, x) == t:
                roots.add(x)
    return sorted(roots)


def r_primitive(t, r: int) -> bool:
    """No rational solution of C_r(x) = t."""
    return not cheb_preimages(r, t)


def r_facts(t, r: int) -> RFacts:
    """r-primitivity plus the +-r-square genericity class (odd r only)."""
    t = Fraction(t)
    primitive = r_primitive(t, r)
    if r == 2:
        return RFacts(primitive, Genericity.GENERIC)
    delta = t * t - 4
    sign = 1 if r % 4 == 1 else -1
    sq = is_r_scaled_square(delta, r, sign)
    if sq:
        kind = Genericity.PLUS_SQUARE if sign == 1 else Genericity.MINUS_SQUARE
        return RFacts(primitive, kind, sq.root)
    return RFacts(primitive, Genericity.GENERIC)


def classify(t, rs=_DEFAULT_RS) -> ParamClass:
    """Classify t exactly; raises ExcludedParameter on 0, +-1, +-2."""
    t = Fraction(t)
    if t in _EXCLUDED:
        raise ExcludedParameter(f"t = {t} is excluded")
    delta = t * t - 4
    out = ParamClass(t=t)

    red = is_square(delta)
    if red:
        out.reducible = True
        out.reducible_witness = red.root
    circ = is_square(-delta)
    if circ:
        out.circular = True
        out.circular_associate = circ.root
    cub = is_r_scaled_square(delta, 3, -1)
    if cub:
        b = cub.root
        out.cubic = True
        out.cubic_b = b
        out.cubic_associates = ((-t + 3 * b) / 2, (-t - 3 * b) / 2)

    plus = is_square(2 + t)
    minus = is_square(2 - t)
    dbl_plus = is_square(2 * (2 + t))
    dbl_minus = is_square(2 * (2 - t))
    dbl_delta = is_square(2 * (4 - t * t))
    plain_rational = bool(plus) or bool(minus) or bool(circ)

    out.type_a = (bool(dbl_plus) or bool(dbl_minus)) and not plain_rational
    out.type_b = bool(dbl_delta) and not plain_rational
    out.twin_primitive = not plus and not minus
    out.two_generic = not (plain_rational or dbl_plus or dbl_minus or dbl_delta)
    if out.cubic:
        a1, a2 = out.cubic_associates
        out.cubic_primitive = all(r_primitive(v, 3) for v in (t, a1, a2))
    out.circular_primitive = out.circular and not plus and not dbl_plus

    out.per_r = {r: r_facts(t, r) for r in rs}
    return out


def associates(t) -> list:
    """Associate values as (label, value) pairs: twin always; cubic/circular when present."""
    c = classify(t, rs=())
    out = [("twin", -c.t)]
    if c.cubic:
        a1, a2 = c.cubic_associates
        out += [("cubic_a1", a1), ("cubic_a2", a2)]
    if c.circular:
        out.append(("circular", c.circular_associate))
    return out


# ---------------------------------------------------------------------------
# circular tower recognition: v = w_k after k doubling steps
# ---------------------------------------------------------------------------


def circular_tower_depth(t, cap: int = TOWER_HALVING_CAP) -> Optional[int]:
    """Depth k >= 1 if t arises as the w-side of k squarings of a
    circular-primitive pair (t0, w0); None when not recognized within cap.

    The search inverts t_j = t_{j-1}**2 - 2, w_j = t_{j-1} * w_{j-1}:
    halve the non-primitive side of the pair while 2 +- x is a rational
    square, and accept when both sides of the pair become 2-primitive.
    For circular values the 2-primitivity test is sign-independent
    because (2 + x)(2 - x) is the square of the associate.
    """
    t = Fraction(t)
    sq = is_square(4 - t * t)
    if not sq:
        return None
    return _tower_search(sq.root, t, 0, cap)


def _tower_search(x, y, depth: int, cap: int) -> Optional[int]:
    s_plus = is_square(2 + x)
    s_minus = is_square(2 - x)
    if not s_plus and not s_minus:
        # x is 2-primitive; accept iff the w-side is too and we halved at all
        if depth >= 1 and not is_square(2 + y) and not is_square(2 - y):
            return depth
        return None
    if depth >= cap:
        return None
    for s in (s_plus, s_minus):
        if s and s.root != 0:
            found = _tower_search(s.root, y / s.root, depth + 1, cap)
            if found is not None:
                return found
    return None


# ---------------------------------------------------------------------------
# exact density predictions
# ---------------------------------------------------------------------------


@dataclass
class Prediction:
    """Exact density sequence for the r-adic valuation partition of chi.

    densities[j] is the predicted prime density of {p : r^j || chi(t, p)}
    for j = 0..j_max; beyond geo_start the sequence is geometric with
    ratio 1/r, and the total mass (with the geometric tail) is exactly 1.
    """

    r: int
    j_max: int
    densities: list
    tail_ratio: Fraction
    geo_start: int
    source: str
    conjectural: bool = False
    supported: bool = True
    _full: list = field(default_factory=list, repr=False)

    def total_mass(self) -> Fraction:
        if not self.supported:
            raise ValueError("unsupported prediction has no mass")
        return sum(self._full) + self._full[-1] / (self.r - 1)


def _unsupported(r: int, j_max: int, source: str = "unsupported") -> Prediction:
    return Prediction(
        r=r, j_max=j_max, densities=[], tail_ratio=Fraction(1, r),
        geo_start=0, source=source, supported=False,
    )


def _from_full(full, r, j_max, geo_start, source, conjectural=False) -> Prediction:
    while len(full) < max(j_max + 1, geo_start + 1) + 1:
        full.append(full[-1] / r)
    return Prediction(
        r=r, j_max=j_max, densities=full[: j_max + 1], tail_ratio=Fraction(1, r),
        geo_start=geo_start, source=source, conjectural=conjectural, _full=full,
    )


def _geometric(r, j_max, weight, source) -> Prediction:
    """d_0 = 1 - weight*r/(r**2-1), d_j = weight/((r+1) r**(j-1)); weight 1 or 2."""
    full = [1 - Fraction(weight * r, r * r - 1)]
    for j in range(1, max(j_max, 1) + 1):
        full.append(Fraction(weight, (r + 1) * r ** (j - 1)))
    return _from_full(full, r, j_max, 1, source)


def _stated(r, j_max, head, source, conjectural=False) -> Prediction:
    """Theorem-stated head values; the tail is geometric and carries the
    remaining mass, so its first value is (1 - sum(head)) * (r-1)/r."""
    full = list(head)
    full.append((1 - sum(head)) * Fraction(r - 1, r))
    return _from_full(full, r, j_max, len(head), source, conjectural)


def predicted_densities(c: ParamClass, r: int, j_max: int) -> Prediction:
    """Exact density prediction for the valuation partition of chi(t, p).

    Unsupported parameters yield a record with supported=False rather
    than an exception; the circular tower case is flagged conjectural.
    """
    if not _is_prime(r):
        raise ValueError(f"r must be prime, got {r}")
    if j_max < 0:
        raise ValueError("j_max must be >= 0")
    return _predict(c, r, j_max, 0)


def _predict(c: ParamClass, r: int, j_max: int, depth: int) -> Prediction:
    facts = c.per_r.get(r) or r_facts(c.t, r)

    if not facts.primitive:
        if depth >= SHIFT_RECURSION_CAP:
            return _unsupported(r, j_max, "shift-depth-exceeded")
        for u in cheb_preimages(r, c.t):
            if u in _EXCLUDED:
                continue
            sub = _predict(classify(u, rs=()), r, j_max + 1, depth + 1)
            if sub.supported:
                full = list(sub._full)
                full = [full[0] + full[1]] + full[2:]
                geo = max(sub.geo_start - 1, 1)
                return _from_full(
                    full, r, j_max, geo, f"root-shift({u})->{sub.source}", sub.conjectural
                )
        return _unsupported(r, j_max, "no-supported-root")

    if r == 2:
        if c.two_generic:
            return _geometric(2, j_max, 1, "two-generic")
        if c.type_a:
            head = [Fraction(7, 24), Fraction(7, 24), Fraction(1, 3)]
            return _stated(2, j_max, head, "type-a")
        if c.type_b:
            head = [Fraction(7, 24), Fraction(7, 24), Fraction(1, 12)]
            return _stated(2, j_max, head, "type-b")
        if c.circular_primitive:
            return _stated(2, j_max, [Fraction(1, 6), Fraction(1, 6)], "circular-primitive")
        if c.circular:
            k = circular_tower_depth(c.t)
            if k is not None:
                lowest = Fraction(1, 3 * 2 ** (k + 1))
                head = [lowest, lowest, 1 - Fraction(1, 3 * 2 ** (k - 1))]
                return _stated(2, j_max, head, f"circular-tower(k={k})", conjectural=True)
            return _unsupported(2, j_max, "circular-tower-unrecognized")
        return _unsupported(2, j_max, "no-two-adic-rule")

    if facts.genericity is Genericity.GENERIC:
        return _geometric(r, j_max, 1, "generic")
    if facts.genericity is Genericity.PLUS_SQUARE:
        # the plus-square case keeps the generic density values
        return _geometric(r, j_max, 1, "plus-square")
    # minus-square: doubled densities; for r = 3 only under cubic primitivity
    if r == 3:
        if c.cubic and c.cubic_primitive:
            return _geometric(3, j_max, 2, "cubic-primitive")
        return _unsupported(3, j_max, "cubic-not-primitive")
    return _geometric(r, j_max, 2, "minus-square")


def to_json_dict(c: ParamClass) -> dict:
    """JSON-ready view of a classification (rationals as "a/b" strings)."""

    def fmt(q):
        return None if q is None else str(q)

    return {
        "t": str(c.t),
        "excluded": c.excluded,
        "reducible": c.reducible,
        "reducible_witness": fmt(c.reducible_witness),
        "circular": c.circular,
        "circular_associate": fmt(c.circular_associate),
        "cubic": c.cubic,
        "cubic_b": fmt(c.cubic_b),
        "cubic_associates": (
            None if c.cubic_associates is None else [str(a) for a in c.cubic_associates]
        ),
        "type_a": c.type_a,
        "type_b": c.type_b,
        "twin_primitive": c.twin_primitive,
        "cubic_primitive": c.cubic_primitive,
        "circular_primitive": c.circular_primitive,
        "two_generic": c.two_generic,
        "per_r": {
            str(r): {
                "primitive": f.primitive,
                "genericity": f.genericity.value,
                "scale_root": fmt(f.scale_root),
            }
            for r, f in c.per_r.items()
        },
    }
