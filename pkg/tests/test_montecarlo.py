import math

import pytest

from splitgame import (
    CellCoord,
    ConstraintSet,
    DominanceConstraint,
    NumericOrder,
    OrdinalGame,
    SimulationConfig,
    ValidationError,
    numeric_pure_nash,
    pure_nash,
    simulate_selection,
    verify_nash_numeric,
)


def three_sigma(p: float, trials: int) -> float:
    return 3.0 * math.sqrt(p * (1.0 - p) / trials)


class TestSimulateSelection:
    def test_config_validation(self):
        with pytest.raises(ValidationError):
            SimulationConfig(trials=0, seed=1, p_em12=0.5, p_pf21=0.5)
        with pytest.raises(ValidationError):
            SimulationConfig(trials=10, seed=1, p_em12=1.5, p_pf21=0.5)

    def test_degenerate_bernoullis(self):
        config = SimulationConfig(trials=1000, seed=3, p_em12=0.0, p_pf21=1.0)
        result = simulate_selection(config)
        assert result.freq_cell_22 == 1.0
        assert result.freq_cell_11 == 0.0
        assert result.freq_indeterminate == 0.0

    def test_single_trial_frequencies_are_indicator_values(self):
        config = SimulationConfig(trials=1, seed=5, p_em12=0.5, p_pf21=0.5)
        result = simulate_selection(config)
        for freq in (
            result.freq_cell_11,
            result.freq_cell_22,
            result.freq_indeterminate,
        ):
            assert freq in (0.0, 1.0)

    def test_reproducible_bit_for_bit(self):
        config = SimulationConfig(
            trials=10_000, seed=11, p_em12=0.3, p_pf21=0.7
        )
        assert simulate_selection(config) == simulate_selection(config)
        other = SimulationConfig(trials=10_000, seed=12, p_em12=0.3, p_pf21=0.7)
        assert simulate_selection(config) != simulate_selection(other)

    def test_supremum_frequency_within_three_sigma(self):
        config = SimulationConfig(
            trials=1_000_000, seed=8, p_em12=0.3090, p_pf21=1.0
        )
        result = simulate_selection(config)
        assert abs(result.freq_cell_22 - 0.6910) <= three_sigma(0.6910, config.trials)
        assert result.freq_cell_11 == 0.0

    def test_balanced_probabilities_within_three_sigma(self):
        config = SimulationConfig(
            trials=1_000_000, seed=21, p_em12=0.5, p_pf21=0.5
        )
        result = simulate_selection(config)
        assert abs(result.freq_cell_11 - 0.25) <= three_sigma(0.25, config.trials)
        assert abs(result.freq_cell_22 - 0.25) <= three_sigma(0.25, config.trials)
        assert abs(result.freq_indeterminate - 0.5) <= three_sigma(
            0.5, config.trials
        )

    def test_frequencies_sum_to_one(self):
        config = SimulationConfig(trials=9_999, seed=2, p_em12=0.4, p_pf21=0.2)
        result = simulate_selection(config)
        total = (
            result.freq_cell_11 + result.freq_cell_22 + result.freq_indeterminate
        )
        assert total == pytest.approx(1.0, abs=1e-12)

    def test_result_records_generator_and_error(self):
        config = SimulationConfig(trials=400, seed=0, p_em12=0.5, p_pf21=0.5)
        result = simulate_selection(config)
        assert result.algorithm == "pcg64"
        assert result.standard_error == 0.5 / math.sqrt(400)
        assert result.trials == 400 and result.seed == 0


class TestNumericPureNash:
    def test_dominant_strategy_game(self):
        game = OrdinalGame.from_ids(
            ["hold", "defect"],
            ["hold", "defect"],
            [[("R00", "C00"), ("R01", "C01")], [("R10", "C10"), ("R11", "C11")]],
        )
        values = {
            "R00": 3, "R01": 0, "R10": 4, "R11": 1,
            "C00": 3, "C01": 4, "C10": 0, "C11": 1,
        }
        assert numeric_pure_nash(game, values) == {CellCoord(1, 1)}

    def test_matching_pennies(self):
        game = OrdinalGame.from_ids(
            ["h", "t"],
            ["h", "t"],
            [[("R00", "C00"), ("R01", "C01")], [("R10", "C10"), ("R11", "C11")]],
        )
        values = {
            "R00": 1, "R01": 0, "R10": 0, "R11": 1,
            "C00": 0, "C01": 1, "C10": 1, "C11": 0,
        }
        assert numeric_pure_nash(game, values) == set()

    def test_agrees_with_symbolic_on_numeric_order(self):
        import random

        rng = random.Random(31)
        for _ in range(300):
            n_rows, n_cols = rng.randint(1, 4), rng.randint(1, 4)
            game = OrdinalGame.from_ids(
                [f"r{i}" for i in range(n_rows)],
                [f"c{j}" for j in range(n_cols)],
                [
                    [(f"R{i}_{j}", f"C{i}_{j}") for j in range(n_cols)]
                    for i in range(n_rows)
                ],
            )
            values = {sym: rng.random() for sym in game.symbol_ids()}
            symbolic, undecided = pure_nash(game, NumericOrder(values))
            assert undecided == frozenset()
            assert set(symbolic) == numeric_pure_nash(game, values)


class TestVerifyNashNumeric:
    def test_shipped_game_never_disagrees(self, ipd_game, ipd_constraints):
        verification = verify_nash_numeric(
            ipd_game, ipd_constraints, trials=1000, seed=2024
        )
        assert verification.ok
        assert verification.disagreements == ()
        assert verification.trials == 1000
        assert set(verification.symbolic_equilibria) == {
            CellCoord(0, 0),
            CellCoord(1, 1),
        }
        # all four cells are symbolically decided, so each trial checks four
        assert verification.checked_cells == 4 * 1000

    def test_unconstrained_game_is_vacuously_consistent(self):
        game = OrdinalGame.from_ids(
            ["a", "b"],
            ["x", "y"],
            [[("R00", "C00"), ("R01", "C01")], [("R10", "C10"), ("R11", "C11")]],
        )
        free = ConstraintSet([], universe=game.symbol_ids())
        verification = verify_nash_numeric(game, free, trials=50, seed=1)
        assert verification.ok
        assert verification.checked_cells == 0
        assert len(verification.symbolic_undecided) == 4

    def test_totally_ordered_game_is_always_identical(self):
        game = OrdinalGame.from_ids(
            ["a", "b"],
            ["x", "y"],
            [[("R00", "C00"), ("R01", "C01")], [("R10", "C10"), ("R11", "C11")]],
        )
        constraints = ConstraintSet(
            [
                DominanceConstraint("R00", "R10", 1.0),
                DominanceConstraint("R11", "R01", 1.0),
                DominanceConstraint("C00", "C01", 1.0),
                DominanceConstraint("C11", "C10", 1.0),
            ]
        )
        symbolic, undecided = pure_nash(game, constraints)
        assert undecided == frozenset()
        verification = verify_nash_numeric(game, constraints, trials=200, seed=9)
        assert verification.ok
        for trial in range(200):
            values = constraints.sample_realization([9, trial])
            assert numeric_pure_nash(game, values) == set(symbolic)
