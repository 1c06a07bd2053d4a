"""Finite discrete distributions: construction, moments, tail queries,
tail-integral expectation, convolution, pushforward.

Atoms are kept as parallel numpy arrays (sorted strictly-increasing values,
strictly positive probabilities). After construction the probability vector
is nudged so that math.fsum(probs) == 1.0; complementary tail queries then
agree with 1 up to a single final rounding.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    BadIntervalError,
    EmptySupportError,
    NegativeProbError,
    ProbSumOutOfToleranceError,
    SupportOutsideRangeError,
)

PROB_SUM_TOL = 1e-9


@dataclass(frozen=True)
class Moments:
    """First/second moment summary: mean, variance, and E|X|."""

    mean: float
    variance: float
    mean_abs: float


class FiniteDistribution:
    """A probability law with finite support.

    Build through :func:`make_finite` or :func:`from_samples`; instances are
    immutable (arrays are marked read-only) and safe to share.
    """

    __slots__ = ("values", "probs")

    def __init__(self, values, probs, _checked=False):
        if not _checked:
            raise TypeError(
                "use make_finite()/from_samples() instead of the raw constructor"
            )
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "probs", probs)

    def __setattr__(self, name, value):
        raise AttributeError("FiniteDistribution is immutable")

    def __len__(self):
        return self.values.size

    def __repr__(self):
        pairs = ", ".join(f"{v:g}:{p:.4g}" for v, p in zip(self.values, self.probs))
        return f"FiniteDistribution({{{pairs}}})"

    def atoms(self):
        """Support as a list of (value, prob) pairs, values increasing."""
        return [(float(v), float(p)) for v, p in zip(self.values, self.probs)]

    @property
    def min_support(self):
        return float(self.values[0])

    @property
    def max_support(self):
        return float(self.values[-1])

    # -- probability queries ----------------------------------------------
    # Values are sorted, so each predicate selects a contiguous slice; the
    # slice sum is accumulated exactly with math.fsum and rounded once.

    def prob_ge(self, lam):
        """P(X >= lam)."""
        i = np.searchsorted(self.values, lam, side="left")
        return math.fsum(self.probs[i:])

    def prob_gt(self, lam):
        """P(X > lam)."""
        i = np.searchsorted(self.values, lam, side="right")
        return math.fsum(self.probs[i:])

    def prob_le(self, lam):
        """P(X <= lam)."""
        i = np.searchsorted(self.values, lam, side="right")
        return math.fsum(self.probs[:i])

    def prob_lt(self, lam):
        """P(X < lam)."""
        i = np.searchsorted(self.values, lam, side="left")
        return math.fsum(self.probs[:i])

    def prob_between(self, lo, hi):
        """P(lo <= X < hi) over the half-open interval [lo, hi)."""
        if not lo < hi:
            raise BadIntervalError(f"interval [{lo}, {hi}) is empty or inverted")
        i = np.searchsorted(self.values, lo, side="left")
        j = np.searchsorted(self.values, hi, side="left")
        return math.fsum(self.probs[i:j])

    # -- moments and the tail integral ------------------------------------

    def moments(self):
        """Mean, variance and E|X| by direct summation over the atoms."""
        mean = float(np.dot(self.values, self.probs))
        variance = float(np.dot((self.values - mean) ** 2, self.probs))
        mean_abs = float(np.dot(np.abs(self.values), self.probs))
        return Moments(mean=mean, variance=variance, mean_abs=mean_abs)

    def layer_cake_expectation(self):
        """E|X| computed as the integral of lam -> P(|X| > lam) over [0, inf).

        The tail function is a step function with breakpoints at the atoms of
        |X|, so the integral is a finite sum of width * height terms.  This is
        a deliberately separate code path from :meth:`moments`; the two must
        agree to ~1e-12 relative.
        """
        law = self.pushforward(abs)
        a = law.values
        # tail[j] = P(|X| >= a[j]), the step height on [a[j-1], a[j])
        tail = np.cumsum(law.probs[::-1])[::-1]
        widths = np.diff(a, prepend=0.0)
        return float(np.dot(widths, tail))

    # -- derived laws ------------------------------------------------------

    def convolve(self, other):
        """Law of X + Y for independent X ~ self, Y ~ other."""
        values = np.add.outer(self.values, other.values).ravel()
        probs = np.outer(self.probs, other.probs).ravel()
        return _from_arrays(values, probs)

    def pushforward(self, fn):
        """Law of fn(X); exactly-equal images are merged."""
        try:
            mapped = np.asarray(fn(self.values), dtype=float)
            if mapped.shape != self.values.shape:
                raise TypeError
        except Exception:
            mapped = np.array([float(fn(v)) for v in self.values])
        return _from_arrays(mapped, self.probs.copy())

    def shift(self, c):
        """Law of X + c."""
        return _from_arrays(self.values + c, self.probs.copy())


def make_finite(pairs) -> FiniteDistribution:
    """Build a distribution from (value, prob) pairs.

    Zero-probability pairs are dropped, duplicate values merged, and the
    probabilities rescaled to sum to one.  The input sum must already be
    within 1e-9 of one; larger discrepancies are treated as data bugs.
    """
    pairs = list(pairs)
    if not pairs:
        raise EmptySupportError("no (value, prob) pairs given")
    values = np.array([float(v) for v, _ in pairs])
    probs = np.array([float(p) for _, p in pairs])
    if np.any(probs < 0):
        bad = values[probs < 0][0]
        raise NegativeProbError(f"negative probability at value {bad}")
    total = math.fsum(probs)
    if abs(total - 1.0) > PROB_SUM_TOL:
        raise ProbSumOutOfToleranceError(
            f"probabilities sum to {total!r}, more than {PROB_SUM_TOL} away from 1"
        )
    keep = probs > 0
    if not keep.any():
        raise EmptySupportError("all pairs had zero probability")
    return _from_arrays(values[keep], probs[keep])


def from_samples(samples) -> FiniteDistribution:
    """Empirical distribution of a sample: each distinct value gets count/N."""
    arr = np.asarray(list(samples), dtype=float)
    if arr.size == 0:
        raise EmptySupportError("no samples given")
    values, counts = np.unique(arr, return_counts=True)
    return _from_arrays(values, counts / arr.size)


def _from_arrays(values, probs) -> FiniteDistribution:
    """Shared tail of every constructor: merge, sort, drop zeros, normalize."""
    values = np.asarray(values, dtype=float)
    probs = np.asarray(probs, dtype=float)
    if not np.all(np.isfinite(values)):
        raise ValueError("non-finite support value")
    uniq, inverse = np.unique(values, return_inverse=True)
    merged = np.bincount(inverse, weights=probs, minlength=uniq.size)
    keep = merged > 0
    uniq, merged = uniq[keep], merged[keep]
    if uniq.size == 0:
        raise EmptySupportError("empty support")
    merged /= math.fsum(merged)
    # nudge the heaviest atom so the correctly-rounded total is exactly 1.0
    for _ in range(4):
        resid = 1.0 - math.fsum(merged)
        if resid == 0.0:
            break
        merged[np.argmax(merged)] += resid
    merged.setflags(write=False)
    uniq.setflags(write=False)
    return FiniteDistribution(uniq, merged, _checked=True)


@dataclass(frozen=True)
class RangedVariable:
    """A distribution together with a declared support range [lo, hi]."""

    dist: FiniteDistribution
    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"need lo < hi, got [{self.lo}, {self.hi}]")
        if self.dist.min_support < self.lo or self.dist.max_support > self.hi:
            raise SupportOutsideRangeError(
                f"support [{self.dist.min_support}, {self.dist.max_support}] "
                f"escapes declared range [{self.lo}, {self.hi}]"
            )

    @property
    def width_sq(self):
        return (self.hi - self.lo) ** 2
