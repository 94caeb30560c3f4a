"""Spectra as exact rational multisets.

Two independent constructions of the spectrum at infinity are provided: the
closed-form table and the route through equivariant signatures and the
Alexander polynomial.  The semicontinuity check compares cusp spectra against
the spectrum at infinity on every relevant open unit interval.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple

from .core import CurveType, CuspConfiguration, PuiseuxCusp


class InternalConsistencyError(RuntimeError):
    """The signature/order data failed an integrality guarantee."""


class SpectrumMultiset:
    """A finite multiset of rationals in [0, 2] with positive multiplicities."""

    def __init__(self, entries: Mapping[Fraction, int]):
        cleaned: Dict[Fraction, int] = {}
        for value, mult in entries.items():
            if mult == 0:
                continue
            if mult < 0:
                raise ValueError(f"multiplicity of {value} is negative: {mult}")
            value = Fraction(value)
            if not (0 <= value <= 2):
                raise ValueError(f"spectrum value {value} outside [0, 2]")
            cleaned[value] = cleaned.get(value, 0) + mult
        self._values: Tuple[Fraction, ...] = tuple(sorted(cleaned))
        self._mults: Tuple[int, ...] = tuple(cleaned[v] for v in self._values)
        # prefix[i] = total multiplicity of the first i distinct values
        prefix = [0]
        for mult in self._mults:
            prefix.append(prefix[-1] + mult)
        self._prefix: Tuple[int, ...] = tuple(prefix)

    @classmethod
    def from_values(cls, values: Iterable[Fraction]) -> "SpectrumMultiset":
        counts: Dict[Fraction, int] = {}
        for value in values:
            counts[value] = counts.get(value, 0) + 1
        return cls(counts)

    @property
    def total(self) -> int:
        return self._prefix[-1]

    def entries(self) -> Tuple[Tuple[Fraction, int], ...]:
        return tuple(zip(self._values, self._mults))

    def values(self) -> Tuple[Fraction, ...]:
        return self._values

    def mult(self, x: Fraction) -> int:
        i = bisect.bisect_left(self._values, x)
        if i < len(self._values) and self._values[i] == x:
            return self._mults[i]
        return 0

    def count_open(self, lo: Fraction, hi: Fraction) -> int:
        """Total multiplicity strictly inside (lo, hi)."""
        i = bisect.bisect_right(self._values, lo)
        j = bisect.bisect_left(self._values, hi)
        return self._prefix[j] - self._prefix[i]

    def count_outside_open(self, lo: Fraction, hi: Fraction) -> int:
        return self.total - self.count_open(lo, hi)

    def is_symmetric_about_one(self) -> bool:
        """mult(x) = mult(2 - x) for all x in (0, 1) union (1, 2)."""
        return all(
            self.mult(x) == self.mult(2 - x) for x in self._values if x != 1
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SpectrumMultiset):
            return NotImplemented
        return self.entries() == other.entries()

    def __hash__(self) -> int:
        return hash(self.entries())

    def __repr__(self) -> str:
        body = ", ".join(f"{v}^{m}" for v, m in self.entries())
        return f"SpectrumMultiset({{{body}}})"


def cusp_spectrum(cusp: PuiseuxCusp) -> SpectrumMultiset:
    """The spectrum {i/r + j/s : 1 <= i < r, 1 <= j < s} of a one-pair cusp."""
    r, s = cusp.r, cusp.s
    return SpectrumMultiset.from_values(
        Fraction(i, r) + Fraction(j, s)
        for i in range(1, r)
        for j in range(1, s)
    )


@dataclass(frozen=True)
class SignatureProfile:
    """Equivariant signatures of the two splice components of the link at infinity.

    sigma1[p] = 2*floor(p*b/w) - (b-1) - delta  for p in [1, w-1],
                with delta = 1 iff w | p*b;
    sigma2[q] = 2*floor(q*a/b) - (a-1) - delta' for q in [1, b-1],
                with delta' = 1 iff b | q*a.
    """

    curve: CurveType
    sigma1: Tuple[int, ...]
    sigma2: Tuple[int, ...]

    def sigma1_at(self, p: int) -> int:
        return self.sigma1[p - 1]

    def sigma2_at(self, q: int) -> int:
        return self.sigma2[q - 1]


def signature_profile(curve: CurveType) -> SignatureProfile:
    a, b, w = curve.a, curve.b, curve.w
    sigma1 = tuple(
        2 * (p * b // w) - (b - 1) - (1 if p * b % w == 0 else 0)
        for p in range(1, w)
    )
    sigma2 = tuple(
        2 * (q * a // b) - (a - 1) - (1 if q * a % b == 0 else 0)
        for q in range(1, b)
    )
    return SignatureProfile(curve, sigma1, sigma2)


@dataclass(frozen=True)
class AlexanderData:
    """Root orders of (t-1)(t^w-1)^(b-1)(t^b-1)^(a-1) at roots of unity."""

    curve: CurveType

    @property
    def degree(self) -> int:
        curve = self.curve
        return 1 + curve.w * (curve.b - 1) + curve.b * (curve.a - 1)

    @property
    def second_characteristic_exponent(self) -> int:
        # The size-two Jordan blocks are governed by (t^c - 1)/(t - 1).
        return self.curve.c

    def order_at(self, x: Fraction) -> int:
        """Order of the root at exp(2*pi*i*x) for reduced x in [0, 1)."""
        if not (0 <= x < 1):
            raise ValueError(f"x must lie in [0, 1), got {x}")
        curve = self.curve
        if x == 0:
            return (curve.b - 1) + (curve.a - 1) + 1
        v = x.denominator
        order = 0
        if curve.w % v == 0:
            order += curve.b - 1
        if curve.b % v == 0:
            order += curve.a - 1
        return order


def _fractional_support(curve: CurveType) -> Tuple[Fraction, ...]:
    """All reduced x in (0, 1) of the form p/w or q/b."""
    support = {Fraction(p, curve.w) for p in range(1, curve.w)}
    support |= {Fraction(q, curve.b) for q in range(1, curve.b)}
    return tuple(sorted(support))


def spectrum_at_infinity_table(curve: CurveType) -> SpectrumMultiset:
    """The spectrum at infinity by the closed-form multiplicity table."""
    a, b, w = curve.a, curve.b, curve.w
    entries: Dict[Fraction, int] = {}
    if a + b - 1 > 0:
        entries[Fraction(1)] = a + b - 1
    for x in _fractional_support(curve):
        p_form = (x * w).denominator == 1
        q_form = (x * b).denominator == 1
        if p_form and q_form:
            p = int(x * w)
            q = int(x * b)
            low = p * b // w + q * a // b - 1
            high = a + b - 1 - p * b // w - q * a // b
        elif p_form:
            p = int(x * w)
            low = p * b // w
            high = b - 1 - p * b // w
        else:
            q = int(x * b)
            low = q * a // b
            high = a - 1 - q * a // b
        if low:
            entries[x] = entries.get(x, 0) + low
        if high:
            entries[1 + x] = entries.get(1 + x, 0) + high
    return SpectrumMultiset(entries)


def spectrum_at_infinity_derived(curve: CurveType) -> SpectrumMultiset:
    """The spectrum at infinity recovered from signatures and root orders.

    For x in (0, 1) with exp(2*pi*i*x) a root, the multiplicity of x is
    (order + sigma)/2 and that of 1 + x is (order - sigma)/2, where sigma is
    the total equivariant signature at x.  1 itself has multiplicity a+b-1.
    """
    a, b, w = curve.a, curve.b, curve.w
    profile = signature_profile(curve)
    alexander = AlexanderData(curve)
    entries: Dict[Fraction, int] = {}
    if a + b - 1 > 0:
        entries[Fraction(1)] = a + b - 1
    for x in _fractional_support(curve):
        sigma = 0
        if (x * w).denominator == 1:
            sigma += profile.sigma1_at(int(x * w))
        if (x * b).denominator == 1:
            sigma += profile.sigma2_at(int(x * b))
        order = alexander.order_at(x)
        if (order + sigma) % 2 != 0:
            raise InternalConsistencyError(
                f"order {order} and signature {sigma} at x = {x} have different parity"
            )
        low = (order + sigma) // 2
        high = (order - sigma) // 2
        if low < 0 or high < 0:
            raise InternalConsistencyError(
                f"negative multiplicity at x = {x}: low={low}, high={high}"
            )
        if low:
            entries[x] = entries.get(x, 0) + low
        if high:
            entries[1 + x] = entries.get(1 + x, 0) + high
    return SpectrumMultiset(entries)


@dataclass(frozen=True)
class SemicontinuityWitness:
    """A point x where one of the two interval inequalities fails."""

    x: Fraction
    cusp_inside: int
    infinity_inside: int
    cusp_outside: int
    infinity_outside: int

    @property
    def violates_inside(self) -> bool:
        return self.cusp_inside > self.infinity_inside

    @property
    def violates_outside(self) -> bool:
        return self.cusp_outside > self.infinity_outside


@dataclass(frozen=True)
class SemicontinuityReport:
    witnesses: Tuple[SemicontinuityWitness, ...]
    checked_points: int

    @property
    def obstructed(self) -> bool:
        return bool(self.witnesses)

    @property
    def verdict(self) -> str:
        return "obstructed" if self.obstructed else "passes"


def _interval_counts(
    infinity: SpectrumMultiset,
    cusp_spectra: Tuple[SpectrumMultiset, ...],
    x: Fraction,
) -> SemicontinuityWitness:
    cusp_inside = sum(sp.count_open(x, x + 1) for sp in cusp_spectra)
    cusp_outside = sum(sp.count_outside_open(x, x + 1) for sp in cusp_spectra)
    return SemicontinuityWitness(
        x=x,
        cusp_inside=cusp_inside,
        infinity_inside=infinity.count_open(x, x + 1),
        cusp_outside=cusp_outside,
        infinity_outside=infinity.count_outside_open(x, x + 1),
    )


def semicontinuity_scan_points(
    infinity: SpectrumMultiset,
    cusp_spectra: Tuple[SpectrumMultiset, ...],
) -> Tuple[Fraction, ...]:
    """Evaluation points in (0, 1): critical points off the spectrum at
    infinity, plus midpoints of consecutive critical points.

    Both interval counts are step functions of x, changing only where x
    reaches v or v - 1 for v a value of one of the multisets; the midpoints
    represent every open interval between changes.
    """
    critical = set()
    for multiset in (infinity, *cusp_spectra):
        for v in multiset.values():
            for candidate in (v, v - 1):
                if 0 < candidate < 1:
                    critical.add(candidate)
    ordered = sorted(critical)
    points = set()
    boundary = [Fraction(0), *ordered, Fraction(1)]
    for left, right in zip(boundary, boundary[1:]):
        if left < right:
            points.add((left + right) / 2)
    infinity_values = set(infinity.values())
    points.update(x for x in ordered if x not in infinity_values)
    return tuple(sorted(points))


def semicontinuity_check(
    curve: CurveType, config: CuspConfiguration
) -> SemicontinuityReport:
    """Evaluate both interval inequalities at every scan point in (0, 1)."""
    config.require_genus_compatible(curve)
    infinity = spectrum_at_infinity_table(curve)
    cusp_spectra = tuple(cusp_spectrum(cusp) for cusp in config)
    points = semicontinuity_scan_points(infinity, cusp_spectra)
    witnesses = []
    for x in points:
        counts = _interval_counts(infinity, cusp_spectra, x)
        if counts.violates_inside or counts.violates_outside:
            witnesses.append(counts)
    return SemicontinuityReport(tuple(witnesses), len(points))


def half_window_counts(curve: CurveType, cusp: PuiseuxCusp) -> Tuple[int, int]:
    """Open-interval counts on (1/2, 3/2) of the cusp spectrum and the
    spectrum at infinity."""
    half, three_halves = Fraction(1, 2), Fraction(3, 2)
    cusp_count = cusp_spectrum(cusp).count_open(half, three_halves)
    infinity_count = spectrum_at_infinity_table(curve).count_open(half, three_halves)
    return cusp_count, infinity_count
