import numpy as np
import pytest

from splitgame import (
    ComparisonEvent,
    DomainError,
    EventSpace,
    ValidationError,
    ZeroEvidenceError,
    fixed_point_posterior,
    marginal_probability,
    posterior,
    posterior_update_map,
)

UNIFORM3 = EventSpace.uniform(["e1", "e2", "e3"])


def random_space(rng, size):
    prior = rng.dirichlet(np.ones(size))
    # keep priors safely interior so the fixed point stays defined
    prior = (prior + 0.01) / (1.0 + 0.01 * size)
    return EventSpace(
        tuple(f"e{k}" for k in range(size)), tuple(float(p) for p in prior)
    )


class TestEventSpace:
    def test_uniform(self):
        assert UNIFORM3.labels == ("e1", "e2", "e3")
        assert sum(UNIFORM3.prior) == pytest.approx(1.0, abs=1e-12)

    def test_negative_prior_rejected(self):
        with pytest.raises(DomainError):
            EventSpace(("a", "b"), (1.2, -0.2))

    def test_prior_must_sum_to_one(self):
        with pytest.raises(DomainError):
            EventSpace(("a", "b"), (0.5, 0.4))

    def test_length_mismatch(self):
        with pytest.raises(ValidationError):
            EventSpace(("a", "b"), (1.0,))

    def test_duplicate_labels(self):
        with pytest.raises(ValidationError):
            EventSpace(("a", "a"), (0.5, 0.5))

    def test_index_of(self):
        assert UNIFORM3.index_of("e2") == 1
        with pytest.raises(ValidationError):
            UNIFORM3.index_of("nope")

    def test_comparison_event_distinct_sides(self):
        ComparisonEvent("em12", "EM11", "EM22")
        with pytest.raises(ValidationError):
            ComparisonEvent("bad", "EM11", "EM11")


class TestPosterior:
    def test_uninformative_evidence_returns_prior(self):
        result = posterior(UNIFORM3, (0.4, 0.4, 0.4))
        assert result == pytest.approx(UNIFORM3.prior, abs=1e-12)

    def test_certain_evidence(self):
        assert posterior(UNIFORM3, (1.0, 0.0, 0.0)) == (1.0, 0.0, 0.0)

    def test_hand_worked_update(self):
        result = posterior(UNIFORM3, (0.6, 0.3, 0.3))
        assert result == pytest.approx((0.5, 0.25, 0.25), abs=1e-12)

    def test_zero_evidence(self):
        space = EventSpace(("a", "b"), (1.0, 0.0))
        with pytest.raises(ZeroEvidenceError):
            posterior(space, (0.0, 0.9))

    def test_likelihood_range_checked(self):
        with pytest.raises(DomainError):
            posterior(UNIFORM3, (1.2, 0.5, 0.5))
        with pytest.raises(ValidationError):
            posterior(UNIFORM3, (0.5, 0.5))

    def test_sums_to_one_and_scale_invariant(self):
        rng = np.random.default_rng(11)
        for _ in range(200):
            space = random_space(rng, int(rng.integers(2, 6)))
            likes = rng.uniform(0.05, 1.0, size=len(space))
            base = posterior(space, tuple(likes))
            assert sum(base) == pytest.approx(1.0, abs=1e-12)
            scaled = posterior(space, tuple(likes * 0.25))
            assert scaled == pytest.approx(base, abs=1e-12)


class TestFixedPoint:
    def test_uniform_three_events_is_exactly_one_third(self):
        alpha = fixed_point_posterior(UNIFORM3, (1, 2))
        assert alpha == 1.0 / 3.0  # bit-exact, not approximate

    def test_non_uniform_prior(self):
        space = EventSpace(("a", "b", "c"), (0.5, 0.25, 0.25))
        assert fixed_point_posterior(space, (1, 2)) == 0.5

    def test_two_event_space(self):
        space = EventSpace(("a", "b"), (0.2, 0.8))
        assert fixed_point_posterior(space, (1,)) == 0.2

    def test_fixed_point_equals_prior_for_random_priors(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            space = random_space(rng, int(rng.integers(2, 6)))
            star = int(rng.integers(0, len(space)))
            rest = tuple(k for k in range(len(space)) if k != star)
            alpha = fixed_point_posterior(space, rest)
            assert abs(alpha - space.prior[star]) <= 1e-12

    def test_degenerate_prior_rejected(self):
        certain = EventSpace(("a", "b"), (1.0, 0.0))
        with pytest.raises(DomainError):
            fixed_point_posterior(certain, (1,))
        with pytest.raises(DomainError):
            fixed_point_posterior(certain, (0,))

    def test_index_validation(self):
        with pytest.raises(ValidationError):
            fixed_point_posterior(UNIFORM3, (1, 1))
        with pytest.raises(ValidationError):
            fixed_point_posterior(UNIFORM3, (1, 5))
        with pytest.raises(ValidationError):
            fixed_point_posterior(UNIFORM3, (2,))

    def test_update_map_residual_vanishes_at_fixed_point(self):
        for space in (
            UNIFORM3,
            EventSpace(("a", "b", "c"), (0.5, 0.25, 0.25)),
            EventSpace(("a", "b"), (0.2, 0.8)),
        ):
            rest = tuple(range(1, len(space)))
            alpha = fixed_point_posterior(space, rest)
            assert posterior_update_map(space, 0, alpha) == pytest.approx(
                alpha, abs=1e-15
            )


class TestMarginal:
    def test_constant_conditionals(self):
        assert marginal_probability(UNIFORM3, (0.3, 0.3, 0.3)) == pytest.approx(
            0.3, abs=1e-12
        )

    def test_mean_of_conditionals_under_uniform_prior(self):
        assert marginal_probability(UNIFORM3, (0.6, 0.3, 0.0)) == pytest.approx(
            0.3, abs=1e-12
        )

    def test_degenerate_prior_ignores_other_conditionals(self):
        space = EventSpace(("a", "b", "c"), (1.0, 0.0, 0.0))
        for x, y in ((0.0, 1.0), (0.5, 0.2), (1.0, 0.0)):
            assert marginal_probability(space, (0.7, x, y)) == 0.7

    def test_linearity(self):
        rng = np.random.default_rng(3)
        for _ in range(100):
            space = random_space(rng, 4)
            u = rng.uniform(0, 1, size=4)
            v = rng.uniform(0, 1, size=4)
            lam = float(rng.uniform(0, 1))
            mixed = tuple(lam * a + (1 - lam) * b for a, b in zip(u, v))
            expected = lam * marginal_probability(space, tuple(u)) + (
                1 - lam
            ) * marginal_probability(space, tuple(v))
            assert marginal_probability(space, mixed) == pytest.approx(
                expected, abs=1e-12
            )

    def test_conditional_range_checked(self):
        with pytest.raises(DomainError):
            marginal_probability(UNIFORM3, (0.5, 0.5, 1.5))
