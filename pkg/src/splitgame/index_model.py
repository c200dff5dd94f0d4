"""Gaussian index coefficients: 10-point scale scores to event probabilities.

A country-level integrity or professionalism score feeds a zero-mean Gaussian
tail; the resulting factor k(score) = (1 - tail(sqrt(score))) / 3 scales a
weight in (0, 1) into the probability of a comparison event. Two evaluation
modes exist because the published reference constants (0.3090 for score 3.4,
0.2999 for score 6.5) do not match what the formula actually yields (0.2400
and 0.2633): "computed" evaluates the formula, "published" reproduces the
reference constants verbatim and only accepts the two reference scores.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import Enum

from scipy import integrate

from .errors import DomainError, ValidationError

DEFAULT_VARIANCE = 10.0
SCALE_MAX = 10.0

# quadrature contract: absolute tolerance 1e-10 on a truncated domain
# reaching 12 standard deviations past the lower limit
TAIL_ABS_TOL = 1e-10
_TAIL_SPAN_SIGMAS = 12.0

# event label -> (reference score, published coefficient)
PUBLISHED_TABLE = {
    "em12": (3.4, 0.3090),
    "pf21": (6.5, 0.2999),
}


class Mode(Enum):
    """Coefficient evaluation mode."""

    COMPUTED = "computed"
    PUBLISHED = "published"

    @classmethod
    def parse(cls, text: str) -> "Mode":
        """Accepts "computed", "published", and the alias "paper"."""
        normalized = str(text).strip().lower()
        if normalized == "paper":
            normalized = "published"
        for mode in cls:
            if mode.value == normalized:
                return mode
        raise ValidationError(
            f"unknown mode {text!r}; expected 'computed' or 'published'"
        )


@dataclass(frozen=True)
class IndexParameters:
    """Inputs to one coefficient: a scale score, a weight, and the variance.

    The weight is the prior probability mass the coefficient scales (strictly
    inside (0, 1); the boundary values belong to the reported bounds, not to
    inputs). Scores live on a 10-point scale; values at or below 1 and the
    exact maximum are accepted with a warning since published scores stay in
    the interior.
    """

    score: float
    weight: float
    variance: float = DEFAULT_VARIANCE

    def __post_init__(self):
        if not self.score > 0.0:
            raise DomainError(f"score must be positive, got {self.score!r}")
        if self.score > SCALE_MAX:
            raise DomainError(
                f"score {self.score!r} exceeds the {SCALE_MAX:g}-point scale"
            )
        if not 0.0 < self.weight < 1.0:
            raise DomainError(
                f"weight must lie strictly inside (0, 1), got {self.weight!r}; "
                "boundary values appear only in reported bounds"
            )
        if self.variance <= 0.0:
            raise DomainError(f"variance must be positive, got {self.variance!r}")
        if not 1.0 < self.score < SCALE_MAX:
            warnings.warn(
                f"score {self.score!r} is outside the scale interior "
                f"(1, {SCALE_MAX:g})",
                stacklevel=2,
            )


def gaussian_tail(lower: float, variance: float = DEFAULT_VARIANCE) -> float:
    """P(X > lower) for X ~ Normal(0, variance), by adaptive quadrature.

    The integrand is truncated 12 standard deviations past max(lower, 0);
    the discarded mass is below 1e-30. For lower >= 0 the result lies in
    [0, 0.5].
    """
    if variance <= 0.0:
        raise DomainError(f"variance must be positive, got {variance!r}")
    if math.isinf(lower):
        return 0.0 if lower > 0 else 1.0
    sigma = math.sqrt(variance)
    norm = 1.0 / math.sqrt(2.0 * math.pi * variance)

    def density(x):
        return norm * math.exp(-(x * x) / (2.0 * variance))

    upper = max(lower, 0.0) + _TAIL_SPAN_SIGMAS * sigma
    value, _ = integrate.quad(
        density, lower, upper, epsabs=TAIL_ABS_TOL * 1e-2, limit=200
    )
    return value


def score_factor(score: float, variance: float = DEFAULT_VARIANCE) -> float:
    """The weight-free factor k(score) = (1 - tail(sqrt(score))) / 3.

    Strictly increasing in the score, with limits 1/6 as score -> 0+ and
    1/3 as score -> infinity. This is the raw mathematical map: any positive
    score is accepted here, while the 10-point scale gate lives on
    IndexParameters.
    """
    if not score > 0.0:
        raise DomainError(f"score must be positive, got {score!r}")
    return (1.0 - gaussian_tail(math.sqrt(score), variance)) / 3.0


def selection_coefficient(params: IndexParameters) -> float:
    """weight * k(score): the probability assigned to a comparison event."""
    return params.weight * score_factor(params.score, params.variance)


def published_coefficient(event: str, mode: Mode) -> float:
    """The verbatim published constant for one of the two reference scores.

    Only available in published mode; computed mode must evaluate the formula
    instead of echoing constants that disagree with it.
    """
    if mode is not Mode.PUBLISHED:
        raise ValidationError(
            "published coefficients are only available in published mode"
        )
    try:
        return PUBLISHED_TABLE[event][1]
    except KeyError:
        raise ValidationError(
            f"no published coefficient for event {event!r}; "
            f"known events: {sorted(PUBLISHED_TABLE)}"
        ) from None


def reference_score(event: str) -> float:
    """The scale score the published coefficient for ``event`` refers to."""
    try:
        return PUBLISHED_TABLE[event][0]
    except KeyError:
        raise ValidationError(
            f"no published coefficient for event {event!r}; "
            f"known events: {sorted(PUBLISHED_TABLE)}"
        ) from None
