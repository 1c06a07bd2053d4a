"""Independent verification of the inequality engine.

Three jobs: re-check any BoundReport through a separate summation path,
fuzz every theorem over deterministic randomized instances, and cross-check
the closed-form optimisers with a derivative-free scalar search.

RNG contract: trial i of a campaign with seed S draws from
numpy.random.default_rng([S, i]).  Streams are therefore per-trial
independent, order-insensitive, and stable across runs of one build.
"""

import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from . import bounds as bd
from .dist import RangedVariable, make_finite
from .errors import BadBracketError, UnknownTheoremError
from .transforms import (
    ExpScaled,
    PiecewiseConstant,
    PositivePart,
    PowerPositive,
    ShiftedSquare,
)

THEOREMS = (
    "general_chebyshev",
    "markov_staircase",
    "eisenberg",
    "reverse_markov_gen",
    "chebyshev_gen",
    "cantelli_gen",
    "hoeffding_gen",
    "hoeffding_lemma",
    "layer_cake",
    "abel_identity",
    "n1_reduction",
)

IDENTITY_TOL_REL = 1e-12


@dataclass(frozen=True)
class FuzzConfig:
    """Campaign shape: trial count, master seed, and instance-size ranges."""

    trials: int = 1000
    seed: int = 7
    support_size: tuple = (2, 12)
    value_range: tuple = (-10.0, 10.0)
    ladder_len: tuple = (1, 6)
    keep_worst: bool = False  # serialize the worst case even without violations

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.support_size[0] > self.support_size[1] or self.support_size[0] < 1:
            raise ValueError(f"bad support_size range {self.support_size}")
        if self.value_range[0] >= self.value_range[1]:
            raise ValueError(f"bad value_range {self.value_range}")
        if self.ladder_len[0] > self.ladder_len[1] or self.ladder_len[0] < 1:
            raise ValueError(f"bad ladder_len range {self.ladder_len}")


@dataclass(frozen=True)
class FuzzSummary:
    theorem: str
    trials_run: int
    violations: int
    worst_slack: float
    worst_case: dict | None = field(default=None)

    def to_dict(self):
        return {
            "theorem": self.theorem,
            "trials_run": self.trials_run,
            "violations": self.violations,
            "worst_slack": self.worst_slack,
            "worst_case": self.worst_case,
        }


class CheckResult(NamedTuple):
    ok: bool
    margin: float  # lhs - rhs when the inequality fails, else 0
    reason: str = ""


def check_report(report, tol_rel: float = bd.SOUND_TOL_REL) -> CheckResult:
    """Re-derive the left side with math.fsum and verify lhs <= rhs.

    Fails either on an inequality violation beyond tol_rel or on a
    bookkeeping mismatch between the stored lhs and the re-summed one.
    """
    if tol_rel < 0:
        raise ValueError("tol_rel must be >= 0")
    resum = math.fsum(c * p for c, p in zip(report.coefficients, report.tails))
    if abs(resum - report.lhs) > 1e-12 * max(1.0, abs(report.lhs)):
        return CheckResult(
            ok=False,
            margin=abs(resum - report.lhs),
            reason=f"lhs {report.lhs!r} disagrees with re-summed {resum!r}",
        )
    if report.lhs <= report.rhs + tol_rel * max(1.0, abs(report.rhs)):
        return CheckResult(ok=True, margin=0.0)
    return CheckResult(
        ok=False,
        margin=report.lhs - report.rhs,
        reason=f"lhs {report.lhs!r} exceeds rhs {report.rhs!r}",
    )


# -- instance generation ---------------------------------------------------

def _random_dist(rng, config, nonnegative=False):
    lo, hi = config.value_range
    if nonnegative:
        lo = max(lo, 0.0)
    size = int(rng.integers(config.support_size[0], config.support_size[1] + 1))
    values = rng.uniform(lo, hi, size)
    probs = rng.random(size) + 0.05
    probs /= probs.sum()
    return make_finite(zip(values, probs))


def _random_ladder(rng, config, n=None):
    if n is None:
        n = int(rng.integers(config.ladder_len[0], config.ladder_len[1] + 1))
    start = rng.uniform(0.05, 2.0)
    gaps = rng.uniform(0.1, 2.5, n - 1)
    lam = start + np.concatenate(([0.0], np.cumsum(gaps)))
    return bd.ThresholdLadder(tuple(lam))


def _random_phi(rng):
    kind = int(rng.integers(0, 5))
    if kind == 0:
        return PositivePart()
    if kind == 1:
        return PowerPositive(p=float(rng.uniform(0.5, 3.0)))
    if kind == 2:
        return ShiftedSquare(t=float(rng.uniform(0.0, 3.0)))
    if kind == 3:
        return ExpScaled(s=float(rng.uniform(0.05, 0.8)))
    m = int(rng.integers(1, 4))
    bps = np.sort(rng.uniform(-5.0, 12.0, m))
    levels = np.cumsum(rng.uniform(0.05, 1.0, m + 1))
    return PiecewiseConstant(bps, levels)


def _random_ranged(rng):
    lo = float(rng.uniform(-5.0, 2.0))
    hi = lo + float(rng.uniform(0.5, 4.0))
    size = int(rng.integers(2, 6))
    values = rng.uniform(lo, hi, size)
    probs = rng.random(size) + 0.05
    probs /= probs.sum()
    return RangedVariable(make_finite(zip(values, probs)), lo, hi)


def random_instance(rng, config, theorem) -> dict:
    """Draw one theorem instance; deterministic given the generator state."""
    if theorem not in THEOREMS:
        raise UnknownTheoremError(f"{theorem!r} not in {THEOREMS}")
    if theorem in ("general_chebyshev", "markov_staircase", "abel_identity"):
        return {
            "dist": _random_dist(rng, config),
            "phi": _random_phi(rng),
            "ladder": _random_ladder(rng, config),
        }
    if theorem == "eisenberg":
        d = _random_dist(rng, config, nonnegative=True)
        ladder = _random_ladder(rng, config)
        a = rng.uniform(-2.0, 3.0, len(ladder))
        a[int(rng.integers(0, len(ladder)))] = rng.uniform(0.5, 3.0)
        return {"dist": d, "ladder": ladder, "weights": a}
    if theorem == "reverse_markov_gen":
        d = _random_dist(rng, config)
        ladder = _random_ladder(rng, config)
        m = max(d.max_support, ladder[-1]) + float(rng.uniform(0.1, 3.0))
        return {"dist": d, "ladder": ladder, "M": m}
    if theorem in ("chebyshev_gen", "cantelli_gen"):
        return {"dist": _random_dist(rng, config), "ladder": _random_ladder(rng, config)}
    if theorem == "hoeffding_gen":
        count = int(rng.integers(2, 5))
        variables = [_random_ranged(rng) for _ in range(count)]
        return {"variables": variables, "ladder": _random_ladder(rng, config)}
    if theorem == "hoeffding_lemma":
        d = _random_dist(rng, config)
        d = d.shift(-d.moments().mean)
        lo = d.min_support - float(rng.uniform(0.0, 1.0))
        hi = d.max_support + float(rng.uniform(0.0, 1.0))
        return {"dist": d, "range": (lo, hi), "s": float(rng.uniform(0.05, 2.0))}
    if theorem == "layer_cake":
        return {"dist": _random_dist(rng, config)}
    # n1_reduction: one singleton-ladder instance per classical family
    d = _random_dist(rng, config)
    lam = float(rng.uniform(0.1, 5.0))
    m = max(d.max_support, lam) + float(rng.uniform(0.5, 3.0))
    variables = [_random_ranged(rng) for _ in range(int(rng.integers(1, 4)))]
    return {
        "dist": d,
        "phi": _random_phi(rng),
        "lam": lam,
        "M": m,
        "variables": variables,
    }


# -- per-trial evaluation --------------------------------------------------

def _rel_gap(a, b):
    scale = max(abs(a), abs(b))
    if scale == 0.0:
        return 0.0
    return abs(a - b) / scale


def _fsum_mean(d):
    return math.fsum(v * p for v, p in zip(d.values, d.probs))


def _fsum_var(d):
    mean = _fsum_mean(d)
    return math.fsum((v - mean) ** 2 * p for v, p in zip(d.values, d.probs))


def _check_n1(inst, tol_rel):
    """Singleton ladders must reproduce the classical parent formulas.

    Each comparison pits the generalized operation's implied tail bound
    (rhs / first coefficient) against the classical closed form computed
    by direct fsum enumeration.  Returns the worst relative gap, negated
    so that "more negative" means "worse", matching the slack convention.
    """
    d, phi, lam, m = inst["dist"], inst["phi"], inst["lam"], inst["M"]
    ladder = bd.ThresholdLadder((lam,))
    gaps = []

    rep = bd.markov_staircase(d, phi, ladder)
    phi_lam = phi(lam)
    if phi_lam > 0:
        classical = math.fsum(
            float(phi(v)) * p for v, p in zip(d.values, d.probs)
        ) / phi_lam
        gaps.append(_rel_gap(rep.rhs / rep.coefficients[0], classical))

    rep = bd.reverse_markov_gen(d, ladder, m)
    classical = (m - _fsum_mean(d)) / (m - lam)
    gaps.append(_rel_gap(rep.rhs / rep.coefficients[0], classical))

    var = _fsum_var(d)
    if var > 0:
        rep = bd.chebyshev_gen(d, ladder)
        gaps.append(_rel_gap(rep.rhs / rep.coefficients[0], var / lam**2))
        rep = bd.cantelli_gen(d, ladder)
        gaps.append(_rel_gap(rep.rhs / rep.coefficients[0], var / (var + lam**2)))

    variables = inst["variables"]
    rep = bd.hoeffding_gen(variables, ladder)
    ssq = math.fsum((rv.hi - rv.lo) ** 2 for rv in variables)
    gaps.append(_rel_gap(rep.rhs, math.exp(-2.0 * lam**2 / ssq)))

    worst = max(gaps)
    return worst <= tol_rel, -worst


def _run_trial(theorem, inst, tol_rel):
    """Returns (ok, slack): slack is rhs - lhs for inequalities and the
    negated deviation for identities, so min-aggregation finds the worst."""
    if theorem == "general_chebyshev":
        rep = bd.general_chebyshev(inst["dist"], inst["phi"], inst["ladder"])
    elif theorem == "markov_staircase":
        rep = bd.markov_staircase(inst["dist"], inst["phi"], inst["ladder"])
    elif theorem == "eisenberg":
        rep = bd.eisenberg(inst["dist"], inst["ladder"], inst["weights"])
    elif theorem == "reverse_markov_gen":
        rep = bd.reverse_markov_gen(inst["dist"], inst["ladder"], inst["M"])
    elif theorem == "chebyshev_gen":
        rep = bd.chebyshev_gen(inst["dist"], inst["ladder"])
    elif theorem == "cantelli_gen":
        rep = bd.cantelli_gen(inst["dist"], inst["ladder"])
    elif theorem == "hoeffding_gen":
        rep = bd.hoeffding_gen(inst["variables"], inst["ladder"])
    elif theorem == "hoeffding_lemma":
        mgf, bound = bd.hoeffding_lemma_gap(inst["dist"], inst["range"], inst["s"])
        ok = mgf <= bound + tol_rel * max(1.0, abs(bound))
        return ok, bound - mgf
    elif theorem == "layer_cake":
        d = inst["dist"]
        gap = _rel_gap(d.layer_cake_expectation(), d.moments().mean_abs)
        return gap <= IDENTITY_TOL_REL, -gap
    elif theorem == "abel_identity":
        d, phi, ladder = inst["dist"], inst["phi"], inst["ladder"]
        gap = _rel_gap(
            bd.general_chebyshev(d, phi, ladder).lhs,
            bd.markov_staircase(d, phi, ladder).lhs,
        )
        return gap <= IDENTITY_TOL_REL, -gap
    elif theorem == "n1_reduction":
        return _check_n1(inst, IDENTITY_TOL_REL)
    else:
        raise UnknownTheoremError(f"{theorem!r} not in {THEOREMS}")
    result = check_report(rep, tol_rel)
    return result.ok, rep.slack


def _serialize_instance(theorem, trial, inst):
    out = {"theorem": theorem, "trial": trial}
    for key, val in inst.items():
        if key in ("dist",):
            out[key] = inst[key].atoms()
        elif key == "phi":
            out[key] = val.spec()
        elif key == "ladder":
            out[key] = list(val.thresholds)
        elif key == "variables":
            out[key] = [
                {"atoms": rv.dist.atoms(), "lo": rv.lo, "hi": rv.hi} for rv in val
            ]
        elif key == "weights":
            out[key] = [float(w) for w in val]
        elif key == "range":
            out[key] = [float(x) for x in val]
        else:
            out[key] = float(val)
    return out


def fuzz_theorem(theorem, config: FuzzConfig, tol_rel: float = bd.SOUND_TOL_REL):
    """Run `config.trials` independent instances of one theorem.

    Inequality theorems are checked through check_report at tol_rel;
    identity theorems (layer_cake, abel_identity, n1_reduction) at
    IDENTITY_TOL_REL relative.  The summary is deterministic given the
    config; worst_case is serialized when a violation occurred or
    config.keep_worst is set.
    """
    if theorem not in THEOREMS:
        raise UnknownTheoremError(f"{theorem!r} not in {THEOREMS}")
    violations = 0
    worst_slack = math.inf
    worst_case = None
    for trial in range(config.trials):
        rng = np.random.default_rng([config.seed, trial])
        inst = random_instance(rng, config, theorem)
        ok, slack = _run_trial(theorem, inst, tol_rel)
        if not ok:
            violations += 1
        if slack < worst_slack:
            worst_slack = slack
            worst_case = _serialize_instance(theorem, trial, inst)
    if violations == 0 and not config.keep_worst:
        worst_case = None
    return FuzzSummary(
        theorem=theorem,
        trials_run=config.trials,
        violations=violations,
        worst_slack=worst_slack,
        worst_case=worst_case,
    )


def fuzz_all(config: FuzzConfig, tol_rel: float = bd.SOUND_TOL_REL):
    """fuzz_theorem for every identifier, in the canonical order."""
    return [fuzz_theorem(th, config, tol_rel) for th in THEOREMS]


# -- scalar minimisation ---------------------------------------------------

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def minimize_scalar(f, bracket, tol: float = 1e-10) -> float:
    """Golden-section search for the minimiser of a unimodal f on [lo, hi].

    Unimodality is the caller's responsibility.  The returned point is
    within tol * max(1, |argmin|) of the true minimiser.
    """
    lo, hi = (float(bracket[0]), float(bracket[1]))
    if not lo < hi:
        raise BadBracketError(f"need lo < hi, got ({lo}, {hi})")
    c = hi - _INVPHI * (hi - lo)
    d = lo + _INVPHI * (hi - lo)
    fc, fd = f(c), f(d)
    for _ in range(1000):
        if hi - lo <= tol * max(1.0, abs(lo), abs(hi)):
            break
        if fc < fd:
            hi, d, fd = d, c, fc
            c = hi - _INVPHI * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + _INVPHI * (hi - lo)
            fd = f(d)
    return 0.5 * (lo + hi)
