"""Bayesian machinery over a finite partition of environment events.

The event space is a finite partition with a prior summing to one. Besides
the plain Bayes update this module houses the independence fixed point: if
every event but one is uninformative about a comparison event, the remaining
event's posterior must equal its own prior.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from .errors import DomainError, ValidationError, ZeroEvidenceError

PRIOR_TOLERANCE = 1e-12

EVENT_EM12 = "em12"
EVENT_PF21 = "pf21"


@dataclass(frozen=True)
class EventSpace:
    """A finite partition of mutually exclusive events with a prior."""

    labels: Tuple[str, ...]
    prior: Tuple[float, ...]

    def __post_init__(self):
        if not self.labels:
            raise ValidationError("event space needs at least one event")
        if len(set(self.labels)) != len(self.labels):
            raise ValidationError("event labels must be unique")
        if len(self.prior) != len(self.labels):
            raise ValidationError(
                f"{len(self.prior)} prior entries for {len(self.labels)} events"
            )
        for label, p in zip(self.labels, self.prior):
            if p < 0.0:
                raise DomainError(f"prior({label}) = {p!r} is negative")
        total = sum(self.prior)
        if abs(total - 1.0) > PRIOR_TOLERANCE:
            raise DomainError(
                f"prior sums to {total!r}, outside 1 +/- {PRIOR_TOLERANCE}"
            )

    @classmethod
    def uniform(cls, labels: Iterable[str]) -> "EventSpace":
        names = tuple(labels)
        if not names:
            raise ValidationError("event space needs at least one event")
        return cls(names, tuple(1.0 / len(names) for _ in names))

    def __len__(self):
        return len(self.labels)

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValidationError(f"unknown event label {label!r}") from None


@dataclass(frozen=True)
class ComparisonEvent:
    """The event that one payoff symbol outranks another.

    The two canonical labels are "em12" (the row player's temptation payoff
    beats its dutiful payoff) and "pf21" (the column player's strict-course
    payoff beats its lenient one); other labels are fine.
    """

    label: str
    left: str
    right: str

    def __post_init__(self):
        if not self.label:
            raise ValidationError("comparison event label must be non-empty")
        if self.left == self.right:
            raise ValidationError(
                f"comparison event {self.label!r} compares "
                f"{self.left!r} with itself"
            )


def posterior(space: EventSpace, likelihoods: Sequence[float]) -> Tuple[float, ...]:
    """Bayes update: posterior over events given per-event likelihoods."""
    if len(likelihoods) != len(space):
        raise ValidationError(
            f"{len(likelihoods)} likelihoods for {len(space)} events"
        )
    for label, lik in zip(space.labels, likelihoods):
        if not 0.0 <= lik <= 1.0:
            raise DomainError(
                f"likelihood given {label} is {lik!r}, outside [0, 1]"
            )
    weighted = [p * lik for p, lik in zip(space.prior, likelihoods)]
    evidence = sum(weighted)
    if evidence <= 0.0:
        raise ZeroEvidenceError("evidence has probability zero under the prior")
    return tuple(w / evidence for w in weighted)


def marginal_probability(space: EventSpace, conditionals: Sequence[float]) -> float:
    """Total probability: sum of prior(event) * p(target | event)."""
    if len(conditionals) != len(space):
        raise ValidationError(
            f"{len(conditionals)} conditionals for {len(space)} events"
        )
    for label, cond in zip(space.labels, conditionals):
        if not 0.0 <= cond <= 1.0:
            raise DomainError(
                f"conditional given {label} is {cond!r}, outside [0, 1]"
            )
    return sum(p * c for p, c in zip(space.prior, conditionals))


def fixed_point_posterior(space: EventSpace, unaffected: Iterable[int]) -> float:
    """Posterior of the one event not assumed independent of the evidence.

    ``unaffected`` lists the indices of every event whose conditional given
    the evidence is pinned to its prior; exactly one event must remain. Let
    its prior be q and its unknown posterior be alpha. Bayes' rule for the
    remaining event, once each unaffected conditional collapses to the
    marginal, leaves the self-consistency relation

        alpha * (1 - q) = alpha * (1 - alpha)

    alpha = 0 is impossible (the event has positive prior and the evidence is
    the comparison actually under consideration), so divide it out and solve
    the linear remainder. The algebra runs in exact rational arithmetic so
    the result is bit-for-bit the value the relation forces.
    """
    indices = list(unaffected)
    if len(set(indices)) != len(indices):
        raise ValidationError("unaffected event indices must be distinct")
    for i in indices:
        if not 0 <= i < len(space):
            raise ValidationError(
                f"event index {i!r} out of range for {len(space)} events"
            )
    remaining = [i for i in range(len(space)) if i not in indices]
    if len(remaining) != 1:
        raise ValidationError(
            "exactly one event must stay outside the unaffected set, "
            f"got {len(remaining)}"
        )
    star = remaining[0]
    q = space.prior[star]
    if not 0.0 < q < 1.0:
        raise DomainError(
            f"prior({space.labels[star]}) = {q!r}: the fixed point needs a "
            "prior strictly inside (0, 1)"
        )
    prior_star = Fraction(q)
    # alpha * (1 - prior_star) = alpha * (1 - alpha), alpha != 0
    # => 1 - alpha = 1 - prior_star
    one_minus_alpha = 1 - prior_star
    alpha = 1 - one_minus_alpha
    return float(alpha)


def posterior_update_map(space: EventSpace, star: int, alpha: float) -> float:
    """One round trip of the fixed-point construction, for residual checks.

    Maps a candidate posterior alpha through the Bayes setup (unaffected
    conditionals pinned to the marginal) back to the implied posterior of the
    distinguished event. The fixed point of this map is what
    ``fixed_point_posterior`` returns.
    """
    if not 0 <= star < len(space):
        raise ValidationError(
            f"event index {star!r} out of range for {len(space)} events"
        )
    q = space.prior[star]
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha = {alpha!r} must lie strictly inside (0, 1)")
    return alpha * (1.0 - q) / (1.0 - alpha)
