"""The semigroup-distribution obstruction and the correction-term formula.

For a curve of type (a, b) with genus g, every integer m in [-g, g] whose
shifted value n = m + g - 1 is divisible by c = gcd(a, b) admits integer
presentations n = s1*b + s2*w with w = a + b*e.  The obstruction requires
R(m + g) >= P(s1, s2) with P(s1, s2) = (s1+1)(s2+1) + s2(s2+1)e/2 for every
such presentation; it is enough to compare against the maximal P.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .core import CurveType, CuspConfiguration, PuiseuxCusp
from .semigroups import CountingFunction, curve_r_function


@dataclass(frozen=True)
class HfWitness:
    """A violated presentation: R(m + g) < P(s1, s2)."""

    m: int
    s1: int
    s2: int
    r_value: int
    p_value: int


@dataclass(frozen=True)
class HfReport:
    witnesses: Tuple[HfWitness, ...]

    @property
    def obstructed(self) -> bool:
        return bool(self.witnesses)

    @property
    def verdict(self) -> str:
        return "obstructed" if self.obstructed else "passes"


def p_bound(s1: int, s2: int, e: int) -> int:
    """(s1+1)(s2+1) + s2(s2+1)e/2, an exact integer for all arguments."""
    return (s1 + 1) * (s2 + 1) + s2 * (s2 + 1) // 2 * e


def _extended_gcd(x: int, y: int) -> Tuple[int, int, int]:
    """Return (g, u, v) with u*x + v*y = g = gcd(x, y)."""
    old_r, r = x, y
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def max_p_over_presentations(
    curve: CurveType, n: int
) -> Optional[Tuple[int, int, int]]:
    """The presentation s1*b + s2*w = n maximizing P, or None if c does not divide n.

    Solutions form the line (s1_0 + k*w/c, s2_0 - k*b/c); P restricted to the
    line is a downward-opening quadratic in k, so the maximum sits next to the
    real vertex.  A +-2 window around the vertex is scanned.  Ties are broken
    towards the larger s1.
    """
    b, w, e = curve.b, curve.w, curve.e
    c, u, v = _extended_gcd(b, w)
    if n % c != 0:
        return None
    s1_0 = u * (n // c)
    s2_0 = v * (n // c)
    step1, step2 = w // c, b // c

    def at(k: int) -> Tuple[int, int, int]:
        s1 = s1_0 + k * step1
        s2 = s2_0 - k * step2
        return s1, s2, p_bound(s1, s2, e)

    # Fit the quadratic P(k) = A k^2 + B k + C from three samples; A < 0
    # because a + b*e/2 > 0.
    p_m1, p_0, p_1 = at(-1)[2], at(0)[2], at(1)[2]
    quad_a = Fraction(p_1 + p_m1 - 2 * p_0, 2)
    quad_b = Fraction(p_1 - p_m1, 2)
    if quad_a >= 0:
        raise AssertionError("P must be concave along the presentation line")
    vertex = -quad_b / (2 * quad_a)
    lo = math.floor(vertex) - 2
    hi = math.ceil(vertex) + 2
    best = None
    for k in range(lo, hi + 1):
        s1, s2, p = at(k)
        if best is None or (p, s1) > (best[2], best[0]):
            best = (s1, s2, p)
    return best


def hf_check(
    curve: CurveType,
    config: CuspConfiguration,
    r_function: Optional[CountingFunction] = None,
) -> HfReport:
    """Scan all m in [-g, g] and collect every violated presentation."""
    if r_function is None:
        r_function = curve_r_function(curve, config)
    g = curve.g
    witnesses = []
    for m in range(-g, g + 1):
        best = max_p_over_presentations(curve, m + g - 1)
        if best is None:
            continue
        s1, s2, p = best
        r_value = r_function(m + g)
        if r_value < p:
            witnesses.append(HfWitness(m, s1, s2, r_value, p))
    return HfReport(tuple(witnesses))


def multiplicity_bound_check(curve: CurveType, cusp: PuiseuxCusp) -> bool:
    """True iff the cusp multiplicity r is at most b.

    This is the specialization s1 = 1, s2 = 0 of the full scan: a cusp with
    r > b has no semigroup element in (0, b + 1), forcing R(b + 1) = 1 < 2.
    """
    return cusp.r <= curve.b


def d_invariant(
    curve: CurveType,
    config: CuspConfiguration,
    m: int,
    r_function: Optional[CountingFunction] = None,
) -> Fraction:
    """The correction term of the boundary of the curve neighbourhood.

    d = -[((d - 2m)^2 - d) / (4d) - 2(R(m + g) - m)], exact, for
    m in [-d/2, d/2).
    """
    d = curve.d
    if not (-d <= 2 * m < d):
        raise ValueError(f"m must lie in [-{d}/2, {d}/2), got {m}")
    if r_function is None:
        r_function = curve_r_function(curve, config)
    square_term = Fraction((d - 2 * m) ** 2 - d, 4 * d)
    return -(square_term - 2 * (r_function(m + curve.g) - m))
