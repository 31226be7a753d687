import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from landau import (
    DomainError,
    LaguerreOverflowError,
    assoc_laguerre,
    assoc_laguerre_scaled,
    fejer_asymptotic,
    laguerre,
    laguerre_scaled,
    laguerre_sequence,
    normalized_assoc_laguerre,
)

from oracles import assoc_laguerre_sum, laguerre_sum, mp_scaled_laguerre


def test_low_degree_values():
    assert laguerre(0, 3.7) == 1.0
    assert laguerre(1, 1.0) == 0.0
    assert laguerre(2, 2.0) == -1.0


def test_scaled_low_degree_values():
    assert laguerre_scaled(0, 2.0) == pytest.approx(math.exp(-1.0), rel=1e-15)
    assert laguerre_scaled(1, 1.0) == 0.0


def test_scaled_matches_plain_times_exponential():
    assert laguerre_scaled(50, 8.0) == pytest.approx(math.exp(-4.0) * laguerre(50, 8.0), rel=1e-12)


@given(st.integers(0, 20), st.fractions(0, 20, max_denominator=64))
@settings(max_examples=150, deadline=None)
def test_recurrence_matches_explicit_sum(n, x):
    exact = laguerre_sum(n, x)
    # scale of the sum is bounded by e^x; relative check with that floor near zeros
    assert abs(laguerre(n, float(x)) - exact) <= 1e-10 * max(abs(exact), 1.0)


@given(st.integers(0, 15), st.integers(0, 12), st.fractions(0, 15, max_denominator=32))
@settings(max_examples=100, deadline=None)
def test_assoc_recurrence_matches_explicit_sum(n, k, x):
    exact = assoc_laguerre_sum(n, k, x)
    assert abs(assoc_laguerre(n, k, float(x)) - exact) <= 1e-10 * max(abs(exact), 1.0)


def test_assoc_examples():
    assert assoc_laguerre(0, 5, 2.3) == 1.0
    assert assoc_laguerre(1, 2, 1.0) == 2.0
    for n in range(8):
        assert assoc_laguerre(n, 0, 1.7) == laguerre(n, 1.7)
    assert assoc_laguerre_scaled(4, 3, 2.0) == pytest.approx(math.exp(-1.0) * assoc_laguerre(4, 3, 2.0), rel=1e-14)


@pytest.mark.parametrize("n, x", [(100, 8.0), (1000, 1.0), (3000, 40.0), (500, 300.0)])
def test_scaled_against_mpmath(n, x):
    assert abs(laguerre_scaled(n, x) - mp_scaled_laguerre(n, x)) < 1e-12


def test_normalized_underflow_regime():
    # exp(-x/2) alone underflows here; the log-scaled recurrence still works
    n, k, x = 1900, 0, 2000.0
    with mpmath.workdps(80):
        ref = float(mpmath.exp(-mpmath.mpf(x) / 2) * mpmath.laguerre(n, k, x))
    got = normalized_assoc_laguerre(n, k, x)
    assert got == pytest.approx(ref, rel=1e-8, abs=1e-300)


@given(st.integers(0, 40), st.integers(0, 40), st.floats(0.0, 60.0))
@settings(max_examples=100, deadline=None)
def test_normalized_is_bounded(n, k, x):
    assert abs(normalized_assoc_laguerre(n, k, x)) <= 1.0 + 1e-12


def test_normalized_k0_bitwise_equals_scaled():
    xs = np.linspace(0.0, 30.0, 61)
    for n in (0, 1, 7, 80):
        np.testing.assert_array_equal(normalized_assoc_laguerre(n, 0, xs), laguerre_scaled(n, xs))


def test_normalized_against_closed_form():
    n, k, x = 6, 4, 2.5
    expected = math.sqrt(math.factorial(n) / math.factorial(n + k)) * x ** (k / 2) * math.exp(-x / 2)
    expected *= assoc_laguerre_sum(n, k, x)
    assert normalized_assoc_laguerre(n, k, x) == pytest.approx(expected, rel=1e-13)


def test_keep_all_stacks_degrees():
    seq = normalized_assoc_laguerre(12, np.array([0, 2, 5]), 3.0, keep_all=True)
    assert seq.shape == (13, 3)
    for j in (0, 5, 12):
        for i, k in enumerate((0, 2, 5)):
            assert seq[j, i] == pytest.approx(normalized_assoc_laguerre(j, k, 3.0), rel=1e-13, abs=1e-16)


def test_sequence_matches_individual_calls():
    seq = laguerre_sequence(30, 4.0)
    assert seq.shape == (31,)
    for n in (0, 10, 30):
        assert seq[n] == laguerre_scaled(n, 4.0)


def test_vectorized_x():
    xs = np.array([0.5, 2.0, 9.0])
    np.testing.assert_array_equal(laguerre_scaled(9, xs), [laguerre_scaled(9, x) for x in xs])


def test_overflow_is_reported():
    with pytest.raises(LaguerreOverflowError, match="laguerre_scaled"):
        laguerre(5000, 3000.0)
    assert np.isfinite(laguerre_scaled(5000, 3000.0))


def test_domain_errors():
    with pytest.raises(DomainError):
        laguerre(3, -0.1)
    with pytest.raises(DomainError):
        laguerre_scaled(-1, 1.0)
    with pytest.raises(DomainError):
        assoc_laguerre(2, -1, 1.0)
    with pytest.raises(DomainError):
        fejer_asymptotic(10, 0.0)


# -- Fejér asymptotics --------------------------------------------------------


def test_fejer_vanishes_at_cosine_zero():
    # 2 sqrt((n+1) x) - pi/4 = pi/2  ->  x = (3 pi / 8)^2 / (n + 1)
    n = 40
    x = (3 * math.pi / 8) ** 2 / (n + 1)
    assert abs(fejer_asymptotic(n, x)) < 1e-15


def test_fejer_error_shrinks_with_n():
    def err(n):
        return abs(fejer_asymptotic(n, 1.0) - laguerre_scaled(n, 1.0) * math.exp(0.5))

    assert err(40_000) < err(10_000)


def test_fejer_within_envelope_at_n100_x8():
    n, x = 100, 8.0
    envelope = math.exp(x / 2) * (n + 1) ** -0.75
    assert abs(fejer_asymptotic(n, x) - laguerre(n, x)) <= 10 * envelope


@pytest.mark.parametrize("x", [1.0, 4.0, 8.0])
def test_fejer_scaled_error_order(x):
    scaled = [
        math.exp(-x / 2) * abs(laguerre_scaled(n, x) * math.exp(x / 2) - fejer_asymptotic(n, x)) * (n + 1) ** 0.75
        for n in (100, 1000, 10_000, 100_000)
    ]
    assert max(scaled) <= 1.0
