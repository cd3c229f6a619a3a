import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import sieve
from primezeta import DomainError, Mode, prime_core as pc


def test_fractional_part_and_bounds():
    assert pc.frac(3.7) == pytest.approx(0.7)
    assert pc.h1(10) == 6
    assert pc.h2(25, 3) == 4
    assert pc.omega0(1) == 0


def test_aux_components_rejects_small_indices():
    with pytest.raises(DomainError):
        pc.aux_components(25, 1, 2)
    comp = pc.aux_components(25, 3, 3)
    # 25 = (2*3 - 1)(2*3 - 1)
    assert comp.omega2 == 0 and comp.eta == 0


@pytest.mark.parametrize("u,expected", [(71, 1), (1, 0), (9, 0), (4.5, 0), (2, 1), (0, 0), (13, 1)])
@pytest.mark.parametrize("mode", list(Mode))
def test_discriminate_examples(u, expected, mode):
    assert pc.discriminate(u, mode).value == expected


def test_large_composite():
    assert pc.discriminate(2591491).value == 0


def test_two_has_empty_inner_product():
    # h2(2, 2) = 1 < 2, so only Omega0 contributes
    assert pc.h2(2, 2) == 1
    assert pc.omega0(2) == 1


def test_generate_examples():
    assert pc.generate(312863) == 312863
    assert pc.generate(35) == 0
    assert pc.generate(0) == 0


def test_discrete_derivatives():
    assert pc.discrete_derivatives(2)[0] == 1
    assert pc.discrete_derivatives(7)[0] == -7
    assert pc.discrete_derivatives(24)[1] == 0


@pytest.mark.parametrize("u,expected", [(100, 25), (1000, 168), (100000, 9592)])
def test_count(u, expected):
    assert pc.count(u, 2).count == expected


def test_count_rejects_reversed_range():
    with pytest.raises(DomainError):
        pc.count(10, 20)


def test_nth_prime():
    assert pc.nth_prime(1) == 2
    assert pc.nth_prime(2) == 3
    assert pc.nth_prime(100) == 541
    with pytest.raises(DomainError):
        pc.nth_prime(0)


def test_primes_up_to_matches_sieve():
    assert pc.primes_up_to(5000) == list(np.flatnonzero(sieve(5000)))


def test_progression_primes():
    assert pc.progression_primes(2, 5, 47) == [2, 7, 17, 37, 47]
    assert pc.progression_primes(3, 4, 3) == [3]
    assert pc.progression_primes(4, 6, 50) == []


def test_negative_input_rejected():
    with pytest.raises(DomainError):
        pc.discriminate(-3)


def test_literal_matches_optimized_on_range():
    lit = pc.discriminate_range(0, 3000, Mode.LITERAL)
    opt = pc.discriminate_range(0, 3000, Mode.OPTIMIZED)
    assert np.array_equal(lit, opt)
    assert np.array_equal(opt.astype(bool), sieve(3000))


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=0, max_value=2_000_000))
def test_optimized_matches_trial_division(u):
    assert pc.discriminate(u).value == pc.oracle_is_prime(u)


@settings(max_examples=100, deadline=None)
@given(st.floats(min_value=0, max_value=1e4, allow_nan=False).filter(lambda x: x != math.floor(x)))
def test_non_integers_are_not_prime(u):
    assert pc.discriminate(u, Mode.LITERAL).value == 0
    assert pc.discriminate(u).value == 0


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 5000), st.integers(0, 500))
def test_count_is_additive(a, width):
    b = a + width
    assert pc.count(b, 2).count - pc.count(a, 2).count == pc.count(b, a).count - pc.discriminate(a).value
