"""Nonnegative nondecreasing transforms applied to random variables.

Every bound in :mod:`tailbounds.bounds` weights tail probabilities by
increments of one of these transforms, so the whole family shares two
requirements: phi(x) >= 0 everywhere and phi nondecreasing on the reals.
Constructors never raise; use :func:`validate_phi` to get a rejection
reason, or let the bound operations reject invalid parameters for you.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidPhiError


class Phi:
    """Base class: a callable transform, vectorised over numpy arrays."""

    def __call__(self, x):
        arr = np.asarray(x, dtype=float)
        out = self._eval(arr)
        if arr.ndim == 0:
            return float(out)
        return out

    def _eval(self, arr):
        raise NotImplementedError


@dataclass(frozen=True)
class PositivePart(Phi):
    """x for x >= 0, else 0."""

    def _eval(self, arr):
        return np.maximum(arr, 0.0)

    def spec(self):
        return "pospart"


@dataclass(frozen=True)
class PowerPositive(Phi):
    """x**p for x >= 0 (p > 0), else 0."""

    p: float

    def _eval(self, arr):
        return np.power(np.maximum(arr, 0.0), self.p)

    def spec(self):
        return f"power:{self.p:g}"


@dataclass(frozen=True)
class ShiftedSquare(Phi):
    """(x + t)**2 for x >= 0 (t >= 0), else 0."""

    t: float

    def _eval(self, arr):
        return np.where(arr >= 0.0, (arr + self.t) ** 2, 0.0)

    def spec(self):
        return f"shifted-square:{self.t:g}"


@dataclass(frozen=True)
class ExpScaled(Phi):
    """exp(s*x) on all of R (s > 0); not zeroed on negatives, so it can be
    applied to centered sums."""

    s: float

    def _eval(self, arr):
        return np.exp(self.s * arr)

    def spec(self):
        return f"exp:{self.s:g}"


@dataclass(frozen=True)
class PiecewiseConstant(Phi):
    """Right-continuous step function: levels[j] on [breakpoints[j-1],
    breakpoints[j]), with levels one entry longer than breakpoints.

    The escape hatch for user-supplied transforms; monotonicity and
    nonnegativity are checked by validate_phi, so downstream code may
    assume them.
    """

    breakpoints: tuple
    levels: tuple

    def __init__(self, breakpoints, levels):
        object.__setattr__(self, "breakpoints", tuple(float(b) for b in breakpoints))
        object.__setattr__(self, "levels", tuple(float(v) for v in levels))

    def _eval(self, arr):
        idx = np.searchsorted(self.breakpoints, arr, side="right")
        return np.asarray(self.levels, dtype=float)[idx]

    def spec(self):
        return f"piecewise:{self.breakpoints}:{self.levels}"


def validate_phi(phi) -> str | None:
    """Return None if phi is a valid transform, else a rejection reason."""
    if isinstance(phi, PositivePart):
        return None
    if isinstance(phi, PowerPositive):
        if not (math.isfinite(phi.p) and phi.p > 0):
            return f"power exponent must be > 0, got {phi.p}"
        return None
    if isinstance(phi, ShiftedSquare):
        if not (math.isfinite(phi.t) and phi.t >= 0):
            return f"shift must be >= 0 (else decreasing on (0, -t)), got {phi.t}"
        return None
    if isinstance(phi, ExpScaled):
        if not (math.isfinite(phi.s) and phi.s > 0):
            return f"exponential scale must be > 0, got {phi.s}"
        return None
    if isinstance(phi, PiecewiseConstant):
        if len(phi.levels) != len(phi.breakpoints) + 1:
            return "need exactly one more level than breakpoints"
        if any(not math.isfinite(b) for b in phi.breakpoints):
            return "non-finite breakpoint"
        if any(b1 >= b2 for b1, b2 in zip(phi.breakpoints, phi.breakpoints[1:])):
            return "breakpoints must be strictly increasing"
        if any(not math.isfinite(v) or v < 0 for v in phi.levels):
            return "levels must be finite and nonnegative"
        if any(v1 > v2 for v1, v2 in zip(phi.levels, phi.levels[1:])):
            return "decreasing level"
        return None
    return f"not a known transform: {phi!r}"


def phi_from_spec(spec: str) -> Phi:
    """Inverse of Phi.spec() for the command-line forms.

    Accepted: "pospart", "power:P", "shifted-square:T", "exp:S".
    Step functions carry too much structure for a one-liner and are
    library-only.
    """
    name, _, arg = spec.strip().partition(":")
    try:
        if name == "pospart":
            if arg:
                raise InvalidPhiError(f"pospart takes no parameter, got {spec!r}")
            phi = PositivePart()
        elif name == "power":
            phi = PowerPositive(p=float(arg))
        elif name == "shifted-square":
            phi = ShiftedSquare(t=float(arg))
        elif name == "exp":
            phi = ExpScaled(s=float(arg))
        else:
            raise InvalidPhiError(f"unknown transform spec {spec!r}")
    except ValueError as exc:
        if isinstance(exc, InvalidPhiError):
            raise
        raise InvalidPhiError(f"bad transform parameter in {spec!r}") from exc
    require_valid_phi(phi)
    return phi


def require_valid_phi(phi):
    """Raise InvalidPhiError if phi fails validation."""
    reason = validate_phi(phi)
    if reason is not None:
        raise InvalidPhiError(reason)


def expect_phi(d, phi) -> float:
    """E[phi(X)] = sum of phi(v_i) * p_i over the atoms of d."""
    require_valid_phi(phi)
    return float(np.dot(phi(d.values), d.probs))
