"""Exception types raised across the package.

Everything derives from TailboundsError so callers (and the CLI) can catch
input/precondition problems with a single except clause.
"""


class TailboundsError(ValueError):
    """Base class for all tailbounds input and precondition errors."""


# -- distribution construction --------------------------------------------

class EmptySupportError(TailboundsError):
    """No atoms left after dropping zero-probability pairs."""


class NegativeProbError(TailboundsError):
    """An input probability is negative."""


class ProbSumOutOfToleranceError(TailboundsError):
    """Input probabilities do not sum to 1 within the accepted tolerance."""


class BadIntervalError(TailboundsError):
    """Interval query with lo >= hi."""


# -- transforms ------------------------------------------------------------

class InvalidPhiError(TailboundsError):
    """Transform parameters violate nonnegativity/monotonicity requirements."""


# -- bound operations ------------------------------------------------------

class InvalidLadderError(TailboundsError):
    """Thresholds not finite, not strictly increasing, or first one not > 0."""


class PhiAtLambda1NotPositiveError(TailboundsError):
    """The transform vanishes at the first threshold."""


class PhiNotFiniteError(TailboundsError):
    """The transform overflows at a ladder point or support point."""


class NegativeSupportError(TailboundsError):
    """Operation requires a nonnegative random variable."""


class AllWeightsNonpositiveError(TailboundsError):
    """Weighted bound needs at least one positive weight."""


class SupportExceedsMError(TailboundsError):
    """Upper bound M lies below the top of the support."""


class LadderNotBelowMError(TailboundsError):
    """Reverse-Markov ladder must stay strictly below M."""


class ZeroVarianceError(TailboundsError):
    """Variance-based bound applied to a single-atom distribution."""


class EmptyVariableListError(TailboundsError):
    """Sum bound needs at least one variable."""


class DegenerateRangesError(TailboundsError):
    """All variable ranges have zero width."""


class SupportTooLargeError(TailboundsError):
    """Exact convolution would exceed the atom-count cap."""


class NonzeroMeanError(TailboundsError):
    """MGF comparison requires a centered distribution."""


class SupportOutsideRangeError(TailboundsError):
    """Support escapes the declared [lo, hi] range."""


class NonpositiveInputError(TailboundsError):
    """Parameter required to be strictly positive."""


class CoefficientZeroAtUnknownError(TailboundsError):
    """Cannot solve for a tail whose coefficient is zero."""


class MultipleUnknownsError(TailboundsError):
    """More than one tail probability missing from the known map."""


# -- oracle ----------------------------------------------------------------

class UnknownTheoremError(TailboundsError):
    """Theorem identifier not recognised."""


class BadBracketError(TailboundsError):
    """Scalar minimisation bracket with lo >= hi."""


# -- cli / file ingestion --------------------------------------------------

class MalformedRowError(TailboundsError):
    """A data file row could not be parsed."""

    def __init__(self, line_no, text):
        super().__init__(f"line {line_no}: malformed row {text!r}")
        self.line_no = line_no
        self.text = text
