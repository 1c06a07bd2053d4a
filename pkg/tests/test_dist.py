"""Distribution container: construction, queries, moments, derived laws."""

import math

import numpy as np
import pytest

from tailbounds import FiniteDistribution, RangedVariable, from_samples, make_finite
from tailbounds.errors import (
    BadIntervalError,
    EmptySupportError,
    NegativeProbError,
    ProbSumOutOfToleranceError,
    SupportOutsideRangeError,
)


def die():
    return make_finite([(v, 1 / 6) for v in range(1, 7)])


def rademacher():
    return make_finite([(-1.0, 0.5), (1.0, 0.5)])


def random_dist(rng, size=None):
    if size is None:
        size = int(rng.integers(2, 12))
    values = rng.uniform(-10, 10, size)
    probs = rng.random(size) + 0.05
    probs /= probs.sum()
    return make_finite(zip(values, probs))


# -- construction ----------------------------------------------------------

def test_make_finite_sorts_and_merges():
    d = make_finite([(2.0, 0.5), (1.0, 0.25), (1.0, 0.25)])
    assert d.atoms() == [(1.0, 0.5), (2.0, 0.5)]


def test_make_finite_drops_zero_prob():
    d = make_finite([(0.0, 0.0), (1.0, 1.0)])
    assert d.atoms() == [(1.0, 1.0)]


def test_make_finite_empty():
    with pytest.raises(EmptySupportError):
        make_finite([])
    # all-zero probs fail the sum gate before the empty-support check
    with pytest.raises(ProbSumOutOfToleranceError):
        make_finite([(3.0, 0.0)])


def test_make_finite_negative_prob():
    with pytest.raises(NegativeProbError):
        make_finite([(0.0, 1.2), (1.0, -0.2)])


def test_make_finite_sum_tolerance():
    with pytest.raises(ProbSumOutOfToleranceError):
        make_finite([(0.0, 0.5), (1.0, 0.6)])
    # within 1e-9: rescaled, not rejected
    d = make_finite([(0.0, 0.5), (1.0, 0.5 + 5e-10)])
    assert math.fsum(d.probs) == 1.0


def test_normalized_sum_is_one():
    rng = np.random.default_rng(11)
    for _ in range(200):
        d = random_dist(rng)
        assert math.fsum(d.probs) == 1.0
        assert all(p > 0 for p in d.probs)
        assert np.all(np.diff(d.values) > 0)


def test_from_samples():
    d = from_samples([1, 1, 2])
    assert d.atoms() == [(1.0, 2 / 3), (2.0, 1 / 3)]
    assert from_samples([5]).atoms() == [(5.0, 1.0)]


def test_from_samples_die_frequencies():
    rng = np.random.default_rng(42)
    draws = rng.integers(1, 7, 600)
    d = from_samples(draws)
    for _, p in d.atoms():
        assert abs(p - 1 / 6) < 0.06


def test_immutable():
    d = die()
    with pytest.raises((ValueError, AttributeError)):
        d.probs[0] = 0.9
    with pytest.raises(AttributeError):
        d.values = np.array([1.0])


# -- probability queries ---------------------------------------------------

def test_prob_examples():
    d = die()
    assert d.prob_ge(5) == pytest.approx(1 / 3, abs=1e-15)
    assert d.prob_between(2, 5) == pytest.approx(1 / 2, abs=1e-15)
    assert d.prob_ge(d.min_support) == 1.0


def test_prob_conventions_at_atom():
    d = die()
    assert d.prob_ge(3) == pytest.approx(4 / 6, abs=1e-15)
    assert d.prob_gt(3) == pytest.approx(3 / 6, abs=1e-15)
    assert d.prob_le(3) == pytest.approx(3 / 6, abs=1e-15)
    assert d.prob_lt(3) == pytest.approx(2 / 6, abs=1e-15)


def test_prob_bad_interval():
    with pytest.raises(BadIntervalError):
        die().prob_between(5, 5)
    with pytest.raises(BadIntervalError):
        die().prob_between(5, 2)


def test_ge_lt_complementarity():
    # split sums land within one final rounding of 1 (each side is an
    # exact fsum, but the two roundings are independent)
    rng = np.random.default_rng(23)
    for _ in range(300):
        d = random_dist(rng)
        lam = rng.choice(d.values) if rng.random() < 0.5 else rng.uniform(-11, 11)
        assert abs(d.prob_ge(lam) + d.prob_lt(lam) - 1.0) <= 2**-52
        assert abs(d.prob_gt(lam) + d.prob_le(lam) - 1.0) <= 2**-52


def test_ge_monotone_in_lambda():
    rng = np.random.default_rng(5)
    for _ in range(100):
        d = random_dist(rng)
        cuts = np.sort(rng.uniform(-11, 11, 8))
        tails = [d.prob_ge(c) for c in cuts]
        assert all(a >= b for a, b in zip(tails, tails[1:]))


# -- moments and the tail integral ----------------------------------------

def test_moments_die():
    m = die().moments()
    assert m.mean == pytest.approx(3.5, abs=1e-12)
    assert m.variance == pytest.approx(35 / 12, abs=1e-12)
    assert m.mean_abs == pytest.approx(3.5, abs=1e-12)


def test_moments_point_mass_and_rademacher():
    m = make_finite([(4.0, 1.0)]).moments()
    assert (m.mean, m.variance) == (4.0, 0.0)
    m = rademacher().moments()
    assert (m.mean, m.variance, m.mean_abs) == (0.0, 1.0, 1.0)


def test_layer_cake_examples():
    assert die().layer_cake_expectation() == pytest.approx(3.5, abs=1e-12)
    assert make_finite([(4.0, 1.0)]).layer_cake_expectation() == pytest.approx(4.0)
    d = make_finite([(-2.0, 0.5), (2.0, 0.5)])
    assert d.layer_cake_expectation() == pytest.approx(2.0, abs=1e-15)


def test_layer_cake_matches_mean_abs():
    for seed in range(120):
        d = random_dist(np.random.default_rng(seed))
        a = d.layer_cake_expectation()
        b = d.moments().mean_abs
        assert abs(a - b) <= 1e-12 * max(abs(a), abs(b), 1.0)


# -- derived laws ----------------------------------------------------------

def test_convolve_bernoulli():
    b = make_finite([(0.0, 0.5), (1.0, 0.5)])
    assert b.convolve(b).atoms() == [(0.0, 0.25), (1.0, 0.5), (2.0, 0.25)]


def test_convolve_identity():
    d = die()
    z = make_finite([(0.0, 1.0)])
    assert d.convolve(z).atoms() == pytest.approx(d.atoms())


def test_convolve_two_dice():
    s = die().convolve(die())
    assert dict(s.atoms())[7.0] == pytest.approx(6 / 36, abs=1e-12)


def test_convolve_moment_additivity():
    rng = np.random.default_rng(31)
    for _ in range(40):
        d1, d2 = random_dist(rng, 6), random_dist(rng, 5)
        m1, m2, ms = d1.moments(), d2.moments(), d1.convolve(d2).moments()
        assert ms.mean == pytest.approx(m1.mean + m2.mean, rel=1e-12, abs=1e-12)
        assert ms.variance == pytest.approx(
            m1.variance + m2.variance, rel=1e-12, abs=1e-12
        )


def test_pushforward_examples():
    d = die().pushforward(lambda x: x * x)
    assert d.atoms() == [(v * v, 1 / 6) for v in range(1, 7)]
    d = rademacher().pushforward(lambda x: max(x, 0.0))
    assert d.atoms() == [(0.0, 0.5), (1.0, 0.5)]
    d = die().pushforward(lambda x: max(x - 3.5, 0.0))
    assert d.atoms() == pytest.approx(
        [(0.0, 0.5), (0.5, 1 / 6), (1.5, 1 / 6), (2.5, 1 / 6)]
    )


def test_pushforward_merges_collisions():
    d = die().pushforward(lambda x: 0.0)
    assert d.atoms() == [(0.0, 1.0)]


def test_shift():
    d = die().shift(-3.5)
    assert d.moments().mean == pytest.approx(0.0, abs=1e-15)
    assert d.min_support == -2.5


def test_ranged_variable_validation():
    b = make_finite([(0.0, 0.5), (1.0, 0.5)])
    rv = RangedVariable(b, 0.0, 1.0)
    assert rv.width_sq == 1.0
    with pytest.raises(SupportOutsideRangeError):
        RangedVariable(b, 0.25, 1.0)
    with pytest.raises(ValueError):
        RangedVariable(b, 1.0, 1.0)
