import math

import pytest
from hypothesis import given, settings, strategies as st
from scipy import integrate

from conftest import li_oracle
from primezeta import DomainError, prime_estimates as pe


def test_li_endpoints():
    assert pe.li_gauss(2) == 0.0
    assert pe.li_gauss(100) == pytest.approx(29.08, abs=0.01)
    assert pe.li_gauss(100) == pytest.approx(li_oracle(100), abs=1e-7)


def test_li_large():
    assert pe.li_gauss(100000) == pytest.approx(9629.62, abs=1.0)
    assert pe.li_gauss(100000) == pytest.approx(li_oracle(100000), abs=1e-6)


@settings(max_examples=40, deadline=None)
@given(st.floats(min_value=2.0, max_value=5e4))
def test_li_matches_mpmath(x):
    assert pe.li_gauss(x) == pytest.approx(li_oracle(x), abs=1e-7)


def test_li_rejects_small_x():
    with pytest.raises(DomainError):
        pe.li_gauss(1.5)


def test_li_asymptotic():
    assert pe.li_asymptotic(100000) == pytest.approx(8685.89, abs=0.01)
    assert pe.li_asymptotic(math.e) == pytest.approx(math.e)
    assert (pe.li_asymptotic(1000) - 168) / 168 == pytest.approx(-0.1383, abs=1e-4)


def test_pnt_ratio_decreases():
    r3 = pe.pnt_ratio(1000)
    r5 = pe.pnt_ratio(100000)
    assert r3 == pytest.approx(168 / 144.765, abs=1e-4)
    assert r5 == pytest.approx(1.1043, abs=1e-4)
    assert r5 < r3


@settings(max_examples=30, deadline=None)
@given(st.floats(0.0, 3.0), st.floats(0.1, 4.0))
def test_adaptive_simpson_matches_quad(a, width):
    f = lambda t: math.exp(-t) * math.cos(3 * t)
    ref, _ = integrate.quad(f, a, a + width, epsabs=1e-13)
    assert pe.adaptive_simpson(f, a, a + width, 1e-10) == pytest.approx(ref, abs=1e-9)


def test_schoenfeld_rhs_value():
    assert pe.schoenfeld_pi_rhs(2657) == pytest.approx(16.17, abs=0.01)
    assert pe.schoenfeld_pi_rhs(2657, pe.VARIANT_RADICAL) < pe.schoenfeld_pi_rhs(2657)


@pytest.mark.parametrize("bound", [pe.SCHOENFELD_PI, pe.TRUDGIAN])
def test_bounds_hold_above_threshold(bound):
    reports = pe.check_pi_bound(2657, 3000, 1, bound)
    assert len(reports) == 344
    assert all(r.holds for r in reports)


def test_incremental_li_matches_direct():
    reports = pe.check_pi_bound(2657, 2757, 25, pe.TRUDGIAN)
    for r in reports:
        direct = abs(pe.prime_core.count(int(r.x), 2).count - li_oracle(r.x))
        assert r.lhs == pytest.approx(direct, abs=1e-6)


def test_schoenfeld_below_threshold_rejected():
    with pytest.raises(DomainError):
        pe.check_pi_bound(100, 200, 1, pe.SCHOENFELD_PI)
