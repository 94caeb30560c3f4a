from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cuspidal import (
    CurveType,
    CuspConfiguration,
    PuiseuxCusp,
    d_invariant,
    hf_check,
    max_p_over_presentations,
    multiplicity_bound_check,
    p_bound,
)


@pytest.mark.parametrize(
    "s1, s2, e, expected",
    [
        (0, 0, 0, 1),
        (1, 0, 5, 2),
        (0, 1, 2, 4),
        (2, 1, 2, 8),
        (3, 2, 1, 15),
        (-1, 0, 0, 0),
    ],
)
def test_p_bound_values(s1, s2, e, expected):
    assert p_bound(s1, s2, e) == expected


def brute_max_p(curve, n, k_range=1000):
    # walk the full solution line of s1*b + s2*w = n within a wide k window
    import math

    b, w = curve.b, curve.w
    c = math.gcd(b, w)
    if n % c != 0:
        return None
    # one particular solution with 0 <= s2 < b/c; the line steps by b/c in s2
    base = None
    for s2 in range(b // c):
        rem = n - s2 * w
        if rem % b == 0:
            base = (rem // b, s2)
            break
    assert base is not None
    s1_0, s2_0 = base
    best = None
    for k in range(-k_range, k_range + 1):
        s1 = s1_0 + k * (w // c)
        s2 = s2_0 - k * (b // c)
        p = p_bound(s1, s2, curve.e)
        if best is None or (p, s1) > (best[2], best[0]):
            best = (s1, s2, p)
    return best


def test_max_p_reproduces_known_presentation():
    assert max_p_over_presentations(CurveType(4, 4, 2), 20) == (2, 1, 8)


def test_max_p_returns_none_off_the_lattice():
    # c = gcd(6, 6) = 6 does not divide 7
    assert max_p_over_presentations(CurveType(6, 6, 0), 7) is None


@pytest.mark.parametrize(
    "curve",
    [CurveType(6, 6, 0), CurveType(4, 4, 2), CurveType(5, 3, 1), CurveType(7, 2, 0)],
)
def test_max_p_matches_wide_brute_force(curve):
    for n in range(-5, 2 * curve.g + 2):
        assert max_p_over_presentations(curve, n) == brute_max_p(curve, n)


@pytest.mark.parametrize("e", [2, 4, 6, 8, 10])
def test_hf_obstructs_even_twist_family(e):
    curve = CurveType(4, 4, e)
    config = CuspConfiguration((PuiseuxCusp(3, 6 * e + 10),))
    report = hf_check(curve, config)
    assert report.obstructed
    assert report.verdict == "obstructed"
    witness = report.witnesses[0]
    assert witness.m == 0
    assert witness.r_value == 2 * e + 3
    assert witness.p_value == 2 * e + 4


@pytest.mark.parametrize("e", [1, 3, 5, 7, 9])
def test_hf_passes_odd_twist_family(e):
    curve = CurveType(4, 4, e)
    config = CuspConfiguration((PuiseuxCusp(3, 6 * e + 10),))
    assert not hf_check(curve, config).obstructed


@pytest.mark.parametrize("r, s", [(2, 51), (3, 26), (6, 11)])
def test_hf_passes_all_degree_six_candidates(r, s):
    report = hf_check(CurveType(6, 6, 0), CuspConfiguration((PuiseuxCusp(r, s),)))
    assert not report.obstructed
    assert report.verdict == "passes"


def test_multiplicity_bound():
    curve = CurveType(6, 6, 0)
    assert multiplicity_bound_check(curve, PuiseuxCusp(2, 51))
    assert multiplicity_bound_check(curve, PuiseuxCusp(6, 11))
    assert not multiplicity_bound_check(curve, PuiseuxCusp(7, 8))
    assert not multiplicity_bound_check(CurveType(5, 2, 0), PuiseuxCusp(3, 4))


def test_d_invariant_smooth_rational_curve():
    curve = CurveType(1, 1, 0)
    config = CuspConfiguration()
    assert d_invariant(curve, config, 0) == Fraction(-1, 4)
    assert d_invariant(curve, config, -1) == Fraction(1, 4)


def test_d_invariant_unicuspidal_value():
    curve = CurveType(6, 6, 0)
    config = CuspConfiguration((PuiseuxCusp(6, 11),))
    assert d_invariant(curve, config, 25) == Fraction(-103, 72)


def test_d_invariant_domain():
    curve = CurveType(1, 1, 0)  # d = 2, so m in {-1, 0}
    config = CuspConfiguration()
    with pytest.raises(ValueError):
        d_invariant(curve, config, 1)
    with pytest.raises(ValueError):
        d_invariant(curve, config, -2)


@given(
    a=st.integers(min_value=1, max_value=8),
    b=st.integers(min_value=1, max_value=8),
    e=st.integers(min_value=0, max_value=3),
)
@settings(max_examples=40)
def test_max_p_is_an_actual_presentation(a, b, e):
    curve = CurveType(a, b, e)
    for n in range(0, 25):
        best = max_p_over_presentations(curve, n)
        if best is None:
            assert n % curve.c != 0
        else:
            s1, s2, p = best
            assert s1 * curve.b + s2 * curve.w == n
            assert p == p_bound(s1, s2, e)
