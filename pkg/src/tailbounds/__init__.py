"""Staircase tail bounds over finite discrete distributions.

Generalized Markov/Chebyshev-type inequalities that charge a whole ladder
of thresholds at once, their single-threshold classical reductions, an
inverter for budgeted tail systems, and a randomized verification oracle.
"""

from . import errors
from .bounds import (
    MAX_SUM_ATOMS,
    SOUND_TOL_REL,
    BoundReport,
    MgfBound,
    OptimalRate,
    OptimalShift,
    TailSolution,
    ThresholdLadder,
    as_ladder,
    cantelli_gen,
    chebyshev_gen,
    eisenberg,
    general_chebyshev,
    hoeffding_gen,
    hoeffding_lemma_gap,
    markov_staircase,
    optimal_rate,
    optimal_shift,
    reverse_markov_gen,
    solve_unknown_tail,
)
from .dist import (
    PROB_SUM_TOL,
    FiniteDistribution,
    Moments,
    RangedVariable,
    from_samples,
    make_finite,
)
from .oracle import (
    IDENTITY_TOL_REL,
    THEOREMS,
    CheckResult,
    FuzzConfig,
    FuzzSummary,
    check_report,
    fuzz_all,
    fuzz_theorem,
    minimize_scalar,
    random_instance,
)
from .transforms import (
    ExpScaled,
    Phi,
    PiecewiseConstant,
    PositivePart,
    PowerPositive,
    ShiftedSquare,
    expect_phi,
    phi_from_spec,
    require_valid_phi,
    validate_phi,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CheckResult",
    "ExpScaled",
    "FiniteDistribution",
    "FuzzConfig",
    "FuzzSummary",
    "IDENTITY_TOL_REL",
    "MAX_SUM_ATOMS",
    "MgfBound",
    "Moments",
    "OptimalRate",
    "OptimalShift",
    "PROB_SUM_TOL",
    "Phi",
    "PiecewiseConstant",
    "PositivePart",
    "PowerPositive",
    "RangedVariable",
    "SOUND_TOL_REL",
    "ShiftedSquare",
    "THEOREMS",
    "TailSolution",
    "ThresholdLadder",
    "as_ladder",
    "cantelli_gen",
    "chebyshev_gen",
    "check_report",
    "eisenberg",
    "errors",
    "expect_phi",
    "from_samples",
    "fuzz_all",
    "fuzz_theorem",
    "general_chebyshev",
    "hoeffding_gen",
    "hoeffding_lemma_gap",
    "make_finite",
    "markov_staircase",
    "minimize_scalar",
    "optimal_rate",
    "optimal_shift",
    "phi_from_spec",
    "random_instance",
    "require_valid_phi",
    "reverse_markov_gen",
    "solve_unknown_tail",
    "validate_phi",
]
