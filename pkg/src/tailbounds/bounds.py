"""The inequality engine.

Each operation evaluates one side of a staircase concentration bound

    sum_k c_k * P_k  <=  B

where the P_k are tail probabilities of a finite distribution at an
increasing ladder of thresholds and the c_k are increments of a nonnegative
nondecreasing transform across the ladder.  With a single threshold every
operation reduces to the classical inequality it generalises (Markov,
reverse Markov, Bienayme-Chebyshev, Cantelli, Hoeffding).

Reports carry both sides plus the per-term breakdown so they can be checked
independently (see :mod:`tailbounds.oracle`) or rendered by the CLI.
"""

import math
import warnings
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .dist import FiniteDistribution, RangedVariable
from .errors import (
    AllWeightsNonpositiveError,
    CoefficientZeroAtUnknownError,
    DegenerateRangesError,
    EmptyVariableListError,
    InvalidLadderError,
    LadderNotBelowMError,
    MultipleUnknownsError,
    NegativeSupportError,
    NonpositiveInputError,
    NonzeroMeanError,
    PhiAtLambda1NotPositiveError,
    PhiNotFiniteError,
    SupportExceedsMError,
    SupportOutsideRangeError,
    SupportTooLargeError,
    ZeroVarianceError,
)
from .transforms import ExpScaled, expect_phi, require_valid_phi

# satisfied <=> lhs <= rhs + SOUND_TOL_REL * max(1, |rhs|): summation noise,
# not statistical slack.
SOUND_TOL_REL = 1e-9

# exact-convolution cap for sums of independent variables
MAX_SUM_ATOMS = 10**6


@dataclass(frozen=True)
class ThresholdLadder:
    """Strictly increasing positive thresholds 0 < l_1 < ... < l_n."""

    thresholds: tuple

    def __post_init__(self):
        t = tuple(float(x) for x in self.thresholds)
        object.__setattr__(self, "thresholds", t)
        if not t:
            raise InvalidLadderError("ladder is empty")
        if any(not math.isfinite(x) for x in t):
            raise InvalidLadderError(f"non-finite threshold in {t}")
        if t[0] <= 0:
            raise InvalidLadderError(f"first threshold must be > 0, got {t[0]}")
        if any(a >= b for a, b in zip(t, t[1:])):
            raise InvalidLadderError(f"thresholds not strictly increasing: {t}")

    def __len__(self):
        return len(self.thresholds)

    def __iter__(self):
        return iter(self.thresholds)

    def __getitem__(self, i):
        return self.thresholds[i]


def as_ladder(obj) -> ThresholdLadder:
    """Coerce a ThresholdLadder or any sequence of reals into a ladder."""
    if isinstance(obj, ThresholdLadder):
        return obj
    return ThresholdLadder(tuple(obj))


@dataclass(frozen=True)
class BoundReport:
    """One evaluated inequality: per-term breakdown plus both sides."""

    theorem: str
    ladder: tuple
    coefficients: tuple
    tails: tuple
    lhs: float
    rhs: float
    slack: float
    satisfied: bool
    params: dict = field(default_factory=dict)

    def to_dict(self):
        """Field order is stable for golden-file testing."""
        return {
            "theorem": self.theorem,
            "ladder": list(self.ladder),
            "coefficients": list(self.coefficients),
            "tails": list(self.tails),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "slack": self.slack,
            "satisfied": self.satisfied,
            "params": self.params,
        }


def _finish(theorem, ladder, coeffs, tails, rhs, params=None):
    coeffs = tuple(float(c) for c in coeffs)
    tails = tuple(float(p) for p in tails)
    lhs = float(np.dot(coeffs, tails))
    rhs = float(rhs)
    return BoundReport(
        theorem=theorem,
        ladder=tuple(ladder.thresholds),
        coefficients=coeffs,
        tails=tails,
        lhs=lhs,
        rhs=rhs,
        slack=rhs - lhs,
        satisfied=lhs <= rhs + SOUND_TOL_REL * max(1.0, abs(rhs)),
        params={k: (int(v) if isinstance(v, (int, np.integer)) else float(v))
                for k, v in (params or {}).items()},
    )


def _phi_on_ladder(phi, ladder):
    vals = np.atleast_1d(np.asarray(phi(np.array(ladder.thresholds)), dtype=float))
    if not np.all(np.isfinite(vals)):
        raise PhiNotFiniteError(f"transform overflows at a ladder point: {vals}")
    return vals


def _expect_phi_finite(d, phi):
    rhs = expect_phi(d, phi)
    if not math.isfinite(rhs):
        raise PhiNotFiniteError("transform overflows on the support")
    return rhs


def _cell_probs(d, ladder):
    """P(l_k <= X < l_{k+1}) for each rung, the last cell extending to +inf."""
    lam = ladder.thresholds
    cells = [d.prob_between(lam[k], lam[k + 1]) for k in range(len(lam) - 1)]
    cells.append(d.prob_ge(lam[-1]))
    return cells


# -- the staircase bounds --------------------------------------------------

def general_chebyshev(d: FiniteDistribution, phi, ladder) -> BoundReport:
    """Increment form: sum_k [phi(l_k) - phi(l_{k-1})] P(X >= l_k) <= E[phi(X)],
    with phi(l_0) taken as 0.  Requires phi(l_1) > 0."""
    ladder = as_ladder(ladder)
    require_valid_phi(phi)
    phi_lam = _phi_on_ladder(phi, ladder)
    if not phi_lam[0] > 0:
        raise PhiAtLambda1NotPositiveError(
            f"phi({ladder[0]}) = {phi_lam[0]}, must be > 0"
        )
    rhs = _expect_phi_finite(d, phi)
    coeffs = np.diff(phi_lam, prepend=0.0)
    tails = [d.prob_ge(lam) for lam in ladder]
    return _finish("general_chebyshev", ladder, coeffs, tails, rhs)


def markov_staircase(d: FiniteDistribution, phi, ladder) -> BoundReport:
    """Cell form: sum_k phi(l_k) P(l_k <= X < l_{k+1}) <= E[phi(X)], the last
    cell reaching to infinity.  Same left-hand side as general_chebyshev by
    Abel summation."""
    ladder = as_ladder(ladder)
    require_valid_phi(phi)
    coeffs = _phi_on_ladder(phi, ladder)
    rhs = _expect_phi_finite(d, phi)
    return _finish("markov_staircase", ladder, coeffs, _cell_probs(d, ladder), rhs)


def eisenberg(d: FiniteDistribution, ladder, weights) -> BoundReport:
    """Weighted cells for a nonnegative variable:
    sum_k a_k P(l_k <= X < l_{k+1}) <= E(X) * a_v / l_v, where v maximises
    a_k / l_k.  Weights may be negative (max must be positive); ties on the
    maximum go to the smallest index."""
    ladder = as_ladder(ladder)
    a = np.asarray([float(w) for w in weights])
    if a.size != len(ladder):
        raise ValueError(f"{a.size} weights for {len(ladder)} thresholds")
    if d.min_support < 0:
        raise NegativeSupportError(f"support reaches {d.min_support} < 0")
    if not np.max(a) > 0:
        raise AllWeightsNonpositiveError(f"max weight is {np.max(a)}")
    lam = np.array(ladder.thresholds)
    v = int(np.argmax(a / lam))
    rhs = d.moments().mean * a[v] / lam[v]
    return _finish(
        "eisenberg", ladder, a, _cell_probs(d, ladder), rhs,
        params={"v": v + 1, "a_v": float(a[v]), "lambda_v": float(lam[v])},
    )


def reverse_markov_gen(d: FiniteDistribution, ladder, m: float) -> BoundReport:
    """Lower-tail form for a variable bounded above by m:
    sum_k (l_{k+1} - l_k) P(X <= l_k) <= m - E(X), with l_{n+1} = m."""
    ladder = as_ladder(ladder)
    m = float(m)
    if d.max_support > m:
        raise SupportExceedsMError(f"support reaches {d.max_support} > M = {m}")
    if ladder[-1] >= m:
        raise LadderNotBelowMError(f"top threshold {ladder[-1]} not below M = {m}")
    lam = np.array(ladder.thresholds)
    coeffs = np.diff(np.append(lam, m))
    tails = [d.prob_le(x) for x in lam]
    rhs = m - d.moments().mean
    return _finish("reverse_markov_gen", ladder, coeffs, tails, rhs, params={"M": m})


def chebyshev_gen(d: FiniteDistribution, ladder) -> BoundReport:
    """Two-sided deviation form:
    sum_k (l_k^2 - l_{k-1}^2) P(|X - E(X)| >= l_k) <= variance, l_0 = 0."""
    ladder = as_ladder(ladder)
    mom = d.moments()
    if mom.variance == 0:
        raise ZeroVarianceError("distribution is a point mass")
    lam = np.array(ladder.thresholds)
    coeffs = np.diff(lam**2, prepend=0.0)
    dev = d.pushforward(lambda v: np.abs(v - mom.mean))
    tails = [dev.prob_ge(x) for x in lam]
    return _finish("chebyshev_gen", ladder, coeffs, tails, mom.variance)


def cantelli_gen(d: FiniteDistribution, ladder) -> BoundReport:
    """One-sided deviation form with variance-shifted coefficients:

        P(Z >= l_1) + sum_{k>=2} [(l_1 l_k + v)^2 - (l_1 l_{k-1} + v)^2]
                                  / (l_1^2 + v)^2 * P(Z >= l_k)
            <= v / (v + l_1^2)

    for Z = X - E(X) and v the variance.  The first coefficient is exactly 1:
    the k = 1 increment starts from l_0 = -v/l_1, where l_1 l_0 + v = 0.
    """
    ladder = as_ladder(ladder)
    mom = d.moments()
    var = mom.variance
    if var == 0:
        raise ZeroVarianceError("distribution is a point mass")
    lam = np.array(ladder.thresholds)
    l1 = lam[0]
    denom = (l1**2 + var) ** 2
    shifted_sq = (l1 * lam + var) ** 2
    coeffs = np.concatenate(([1.0], np.diff(shifted_sq) / denom))
    z = d.shift(-mom.mean)
    tails = [z.prob_ge(x) for x in lam]
    rhs = var / (var + l1**2)
    return _finish(
        "cantelli_gen", ladder, coeffs, tails, rhs, params={"t0": var / l1}
    )


def hoeffding_gen(variables, ladder) -> BoundReport:
    """Sub-Gaussian form for the exact law of a sum of independent bounded
    variables:

        sum_k [e^{r(l_k - l_1)} - e^{r(l_{k-1} - l_1)}] P(S - E(S) >= l_k)
            <= e^{-2 l_1^2 / ssq}

    with ssq = sum of squared range widths and rate r = 4 l_1 / ssq.  The
    k = 1 term starts from l_0 = -inf, so its coefficient is exactly 1.
    The sum's law is computed by exact convolution, capped at MAX_SUM_ATOMS
    atoms: exactness over scale.
    """
    ladder = as_ladder(ladder)
    variables = list(variables)
    if not variables:
        raise EmptyVariableListError("need at least one variable")
    for rv in variables:
        if not isinstance(rv, RangedVariable):
            raise TypeError(f"expected RangedVariable, got {type(rv).__name__}")
    ssq = math.fsum(rv.width_sq for rv in variables)
    if ssq <= 0:
        raise DegenerateRangesError("all ranges have zero width")
    law = variables[0].dist
    if len(law) > MAX_SUM_ATOMS:
        raise SupportTooLargeError(f"{len(law)} atoms exceeds cap {MAX_SUM_ATOMS}")
    for rv in variables[1:]:
        if len(law) * len(rv.dist) > MAX_SUM_ATOMS:
            raise SupportTooLargeError(
                f"convolution would exceed cap of {MAX_SUM_ATOMS} atoms"
            )
        law = law.convolve(rv.dist)
    z = law.shift(-law.moments().mean)
    lam = np.array(ladder.thresholds)
    rate = 4.0 * lam[0] / ssq
    growth = np.exp(rate * (lam - lam[0]))
    if not np.all(np.isfinite(growth)):
        raise PhiNotFiniteError("exponential coefficient overflow on the ladder")
    coeffs = np.diff(growth, prepend=0.0)  # growth[0] == 1 exactly
    tails = [z.prob_ge(x) for x in lam]
    rhs = math.exp(-2.0 * lam[0] ** 2 / ssq)
    return _finish(
        "hoeffding_gen", ladder, coeffs, tails, rhs,
        params={"s0": float(rate), "sum_sq_ranges": float(ssq)},
    )


# -- MGF lemma and closed-form optimisers ----------------------------------

class MgfBound(NamedTuple):
    mgf: float
    bound: float


def hoeffding_lemma_gap(d: FiniteDistribution, rng, s: float) -> MgfBound:
    """E[e^{sX}] against e^{s^2 (b-a)^2 / 8} for a centered variable supported
    in [a, b]; returns both for comparison."""
    a, b = (float(rng[0]), float(rng[1]))
    if s <= 0:
        raise NonpositiveInputError(f"s must be > 0, got {s}")
    mom = d.moments()
    if abs(mom.mean) > 1e-12:
        raise NonzeroMeanError(f"mean is {mom.mean}, need 0 within 1e-12")
    if d.min_support < a or d.max_support > b:
        raise SupportOutsideRangeError(
            f"support [{d.min_support}, {d.max_support}] not inside [{a}, {b}]"
        )
    mgf = expect_phi(d, ExpScaled(s))
    bound = math.exp(s * s * (b - a) ** 2 / 8.0)
    return MgfBound(mgf=mgf, bound=bound)


class OptimalShift(NamedTuple):
    t0: float
    value: float  # g(t0) = var / (var + lambda1^2)


class OptimalRate(NamedTuple):
    s0: float
    bound: float  # exp(g(s0)) = exp(-2 lambda1^2 / sum_sq_ranges)


def optimal_shift(variance: float, lambda1: float) -> OptimalShift:
    """Minimiser t0 = variance / lambda1 of g(t) = (variance + t^2) /
    (lambda1 + t)^2, the shift that tightens the one-sided square bound."""
    if variance <= 0 or lambda1 <= 0:
        raise NonpositiveInputError(
            f"need variance > 0 and lambda1 > 0, got {variance}, {lambda1}"
        )
    t0 = variance / lambda1
    return OptimalShift(t0=t0, value=variance / (variance + lambda1**2))


def optimal_rate(lambda1: float, sum_sq_ranges: float) -> OptimalRate:
    """Minimiser s0 = 4 lambda1 / sum_sq_ranges of g(s) = -s lambda1 +
    s^2 sum_sq_ranges / 8, the MGF rate that tightens the sub-Gaussian
    bound; returns exp(g(s0)) alongside."""
    if lambda1 <= 0 or sum_sq_ranges <= 0:
        raise NonpositiveInputError(
            f"need lambda1 > 0 and sum_sq_ranges > 0, got {lambda1}, {sum_sq_ranges}"
        )
    s0 = 4.0 * lambda1 / sum_sq_ranges
    return OptimalRate(s0=s0, bound=math.exp(-2.0 * lambda1**2 / sum_sq_ranges))


# -- inversion -------------------------------------------------------------

class TailSolution(NamedTuple):
    bound: float  # clipped to [0, 1]
    raw: float    # unclipped, for diagnostics


def solve_unknown_tail(coefficients, budget: float, known, unknown: int) -> TailSolution:
    """Solve sum_k c_k P_k <= budget for the one P_j not in `known`.

    Indices are 1-based, matching the ladder positions in reports.  The
    result is clipped to [0, 1] (anything outside is a vacuous probability
    bound); the raw value is returned alongside.  A warning is emitted if
    the known tails are not nonincreasing in k, since upper tails at an
    increasing ladder must be.
    """
    c = [float(x) for x in coefficients]
    n = len(c)
    if any(x < 0 for x in c):
        raise ValueError(f"coefficients must be nonnegative: {c}")
    known = {int(k): float(p) for k, p in known.items()}
    unknown = int(unknown)
    if not 1 <= unknown <= n:
        raise ValueError(f"unknown index {unknown} outside 1..{n}")
    bad = sorted(set(known) - set(range(1, n + 1)))
    if bad:
        raise ValueError(f"known indices {bad} outside 1..{n}")
    if unknown in known:
        raise ValueError(f"index {unknown} is both known and unknown")
    missing = set(range(1, n + 1)) - set(known) - {unknown}
    if missing:
        raise MultipleUnknownsError(
            f"indices {sorted(missing)} neither known nor the unknown"
        )
    for k, p in known.items():
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"P_{k} = {p} outside [0, 1]")
    if c[unknown - 1] <= 0:
        raise CoefficientZeroAtUnknownError(
            f"coefficient c_{unknown} = {c[unknown - 1]} cannot be inverted"
        )
    ordered = [known[k] for k in sorted(known)]
    if any(a < b for a, b in zip(ordered, ordered[1:])):
        warnings.warn(
            "known tails increase with k; upper-tail probabilities at an "
            "increasing ladder should be nonincreasing",
            stacklevel=2,
        )
    spent = math.fsum(c[k - 1] * p for k, p in known.items())
    raw = (float(budget) - spent) / c[unknown - 1]
    return TailSolution(bound=min(1.0, max(0.0, raw)), raw=raw)
