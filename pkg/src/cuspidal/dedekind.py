"""Sawtooth sums: Dedekind and Dedekind-Rademacher sums, reciprocity, and
the half-range sawtooth sums with their limit verification harness.

All sums are exact rationals; internally they are accumulated as integer
numerators over a fixed denominator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple


def sawtooth(x: Fraction) -> Fraction:
    """{x} - 1/2 for non-integer x, and 0 on the integers."""
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - math.floor(x) - Fraction(1, 2)


def _sawtooth_numerator(value: int, modulus: int) -> int:
    """2*modulus times sawtooth(value / modulus)."""
    rem = value % modulus
    if rem == 0:
        return 0
    return 2 * rem - modulus


def dedekind_sum(p: int, q: int) -> Fraction:
    """s(p, q) = sum over i in [0, q) of <i/q><p*i/q>."""
    if q < 1:
        raise ValueError(f"modulus q must be >= 1, got {q}")
    total = 0
    for i in range(q):
        total += _sawtooth_numerator(i, q) * _sawtooth_numerator(p * i, q)
    return Fraction(total, 4 * q * q)


def rademacher_sum(p: int, q: int, r: int) -> Fraction:
    """D(p, q, r) = sum over i in [0, r) of <p*i/r><q*i/r>."""
    if r < 1:
        raise ValueError(f"modulus r must be >= 1, got {r}")
    total = 0
    for i in range(r):
        total += _sawtooth_numerator(p * i, r) * _sawtooth_numerator(q * i, r)
    return Fraction(total, 4 * r * r)


def dedekind_reciprocity_rhs(p: int, q: int) -> Fraction:
    """The two-term law: s(p,q) + s(q,p) for coprime p, q."""
    return Fraction(1, 12) * (
        Fraction(p, q) + Fraction(q, p) + Fraction(1, p * q) - 3
    )


def rademacher_reciprocity_rhs(p: int, q: int, r: int) -> Fraction:
    """The three-term law: D(p,q,r) + D(r,p,q) + D(q,r,p) for pairwise coprime."""
    return Fraction(p * p + q * q + r * r - 3 * p * q * r, 12 * p * q * r)


def section_sums(b: int, w: int) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
    """The four sawtooth sums (a_w, b_w, c_w, d_w) for given b and w.

    a_w sums <p*b/w> over the upper half range p in [ceil(w/2), w-1];
    b_w sums <p*b/w> * 2p/w, c_w sums <p*b/w><2p/w>, and d_w is half the
    full-range sawtooth sum, all over p in [0, w-1].  The exact identity
    a_w = b_w - c_w + d_w holds, with d_w = 0.
    """
    if b < 2 or w < 2:
        raise ValueError(f"need b >= 2 and w >= 2, got b={b}, w={w}")
    a_num = 0  # over 2w
    b_num = 0  # over 2w^2
    c_num = 0  # over 4w^2
    d_num = 0  # over 4w
    half_start = (w + 1) // 2
    for p in range(w):
        saw_b = _sawtooth_numerator(p * b, w)
        if p >= half_start:
            a_num += saw_b
        b_num += saw_b * 2 * p
        c_num += saw_b * _sawtooth_numerator(2 * p, w)
        d_num += saw_b
    return (
        Fraction(a_num, 2 * w),
        Fraction(b_num, 2 * w * w),
        Fraction(c_num, 4 * w * w),
        Fraction(d_num, 4 * w),
    )


def _in_proof_subsequence(b: int, w: int) -> bool:
    if b % 2 == 1:
        return math.gcd(w, 2 * b) == 1
    return math.gcd(b, w) == 2


def limit_values(b: int) -> Tuple[Fraction, Fraction, Fraction]:
    """The proven limits of a_w/w, b_w/w, c_w/w for fixed b."""
    if b % 2 == 1:
        return Fraction(1, 8 * b), Fraction(1, 6 * b), Fraction(1, 24 * b)
    return Fraction(0), Fraction(1, 6 * b), Fraction(1, 6 * b)


@dataclass(frozen=True)
class LimitEntry:
    name: str
    w: int
    value: Fraction
    limit: Fraction

    @property
    def deviation(self) -> Fraction:
        return abs(self.value - self.limit)


@dataclass(frozen=True)
class LimitReport:
    b: int
    tol: Fraction
    entries: Tuple[LimitEntry, ...]
    samples: Tuple[Tuple[int, Fraction, Fraction, Fraction], ...]

    @property
    def all_within_tol(self) -> bool:
        return all(entry.deviation <= self.tol for entry in self.entries)


def _snap_to_subsequence(b: int, target: int) -> Optional[int]:
    for w in range(target, 1, -1):
        if _in_proof_subsequence(b, w):
            return w
    return None


def verify_limits(
    b: int, w_max: int, tol: Fraction = Fraction(1, 200)
) -> LimitReport:
    """Convergence harness for the three limit statements.

    Samples the subsequence used in the corresponding proofs (w coprime to
    2b for odd b; gcd(b, w) = 2 for even b) at a few geometrically spaced
    points up to w_max, and reports the deviations at the largest sample.
    This checks convergence at a finite scale, not the limits themselves.
    """
    if b < 2:
        raise ValueError(f"b must be >= 2, got {b}")
    if w_max < 100:
        raise ValueError(f"w_max must be >= 100, got {w_max}")
    targets = sorted({max(100, w_max // 2**i) for i in range(4)})
    samples = []
    for target in targets:
        w = _snap_to_subsequence(b, target)
        if w is None:
            continue
        a_w, b_w, c_w, _ = section_sums(b, w)
        samples.append((w, a_w / w, b_w / w, c_w / w))
    if not samples:
        raise ValueError(f"no subsequence member <= {w_max} for b = {b}")
    w, a_over, b_over, c_over = samples[-1]
    a_lim, b_lim, c_lim = limit_values(b)
    entries = (
        LimitEntry("a_w/w", w, a_over, a_lim),
        LimitEntry("b_w/w", w, b_over, b_lim),
        LimitEntry("c_w/w", w, c_over, c_lim),
    )
    return LimitReport(b, Fraction(tol), entries, tuple(samples))
