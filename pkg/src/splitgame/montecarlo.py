"""Monte Carlo verification: selection frequencies and numeric Nash checks.

Everything here is an independent check on the closed-form machinery, so the
implementations deliberately avoid reusing it: equilibrium verification scans
payoff matrices by brute force, and selection frequencies come from raw
Bernoulli draws. All randomness flows through numpy's PCG64 generator; the
algorithm identifier is recorded in every result so runs stay reproducible
across environments.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Tuple

import numpy as np

from .constraints import ConstraintSet
from .errors import ValidationError
from .game import CellCoord, OrdinalGame, pure_nash

RNG_ALGORITHM = "pcg64"


@dataclass(frozen=True)
class SimulationConfig:
    """Inputs for a selection-frequency run."""

    trials: int
    seed: int
    p_em12: float
    p_pf21: float

    def __post_init__(self):
        if self.trials < 1:
            raise ValidationError(f"trials must be >= 1, got {self.trials!r}")
        for name in ("p_em12", "p_pf21"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValidationError(
                    f"{name} = {value!r} is outside [0, 1]"
                )


@dataclass(frozen=True)
class SimulationResult:
    """Empirical selection frequencies; they sum to one exactly.

    ``standard_error`` is the worst-case binomial standard error
    0.5 / sqrt(trials); per-cell errors are at most this.
    """

    freq_cell_11: float
    freq_cell_22: float
    freq_indeterminate: float
    standard_error: float
    trials: int
    seed: int
    algorithm: str = RNG_ALGORITHM


def simulate_selection(config: SimulationConfig) -> SimulationResult:
    """Draw the two comparison events independently and tally selections.

    The top-left cell is selected when em12 fires alone, the bottom-right
    cell when pf21 fires alone; both-or-neither draws are indeterminate.
    Deterministic for a given seed.
    """
    rng = np.random.default_rng(config.seed)
    em = rng.random(config.trials) < config.p_em12
    pf = rng.random(config.trials) < config.p_pf21
    n11 = int(np.count_nonzero(em & ~pf))
    n22 = int(np.count_nonzero(pf & ~em))
    trials = config.trials
    return SimulationResult(
        freq_cell_11=n11 / trials,
        freq_cell_22=n22 / trials,
        freq_indeterminate=(trials - n11 - n22) / trials,
        standard_error=0.5 / math.sqrt(trials),
        trials=trials,
        seed=config.seed,
    )


def numeric_pure_nash(
    game: OrdinalGame, values: Mapping[str, float]
) -> frozenset:
    """Pure Nash cells of a numeric payoff assignment, by exhaustive scan.

    Intentionally independent of the symbolic machinery: a cell is an
    equilibrium when no player has a strictly better unilateral deviation.
    """
    cells = game.cells
    result = set()
    for r in range(game.n_rows):
        for c in range(game.n_cols):
            row_value = values[cells[r][c][0].id]
            if any(
                values[cells[alt][c][0].id] > row_value
                for alt in range(game.n_rows)
            ):
                continue
            col_value = values[cells[r][c][1].id]
            if any(
                values[cells[r][alt][1].id] > col_value
                for alt in range(game.n_cols)
            ):
                continue
            result.add(CellCoord(r, c))
    return frozenset(result)


@dataclass(frozen=True)
class Disagreement:
    """One symbolic claim a numeric realization contradicted."""

    trial: int
    cell: CellCoord
    kind: str  # "equilibrium_failed" or "non_equilibrium_appeared"


@dataclass(frozen=True)
class NashVerification:
    """Outcome of cross-checking symbolic Nash cells against realizations."""

    trials: int
    seed: int
    symbolic_equilibria: Tuple[CellCoord, ...]
    symbolic_undecided: Tuple[CellCoord, ...]
    checked_cells: int
    disagreements: Tuple[Disagreement, ...]
    algorithm: str = RNG_ALGORITHM

    @property
    def ok(self) -> bool:
        return not self.disagreements


def verify_nash_numeric(
    game: OrdinalGame,
    constraints: ConstraintSet,
    trials: int,
    seed: int,
) -> NashVerification:
    """Check symbolic Nash statements against sampled numeric realizations.

    Every realization honors the certain order, so a symbolically decided
    cell must come out the same way numerically: decided equilibria must
    survive the brute-force scan and decided non-equilibria must not appear
    in it. Undecided cells may fall either way and are skipped. Realization
    seeds derive deterministically from (seed, trial index).
    """
    if trials < 1:
        raise ValidationError(f"trials must be >= 1, got {trials!r}")
    equilibria, undecided = pure_nash(game, constraints)
    all_cells = {
        CellCoord(r, c)
        for r in range(game.n_rows)
        for c in range(game.n_cols)
    }
    decided_out = all_cells - set(equilibria) - set(undecided)

    found = []
    for trial in range(trials):
        values = constraints.sample_realization([seed, trial])
        numeric = numeric_pure_nash(game, values)
        for cell in equilibria:
            if cell not in numeric:
                found.append(Disagreement(trial, cell, "equilibrium_failed"))
        for cell in decided_out:
            if cell in numeric:
                found.append(
                    Disagreement(trial, cell, "non_equilibrium_appeared")
                )
    return NashVerification(
        trials=trials,
        seed=seed,
        symbolic_equilibria=tuple(sorted(equilibria)),
        symbolic_undecided=tuple(sorted(undecided)),
        checked_cells=(len(equilibria) + len(decided_out)) * trials,
        disagreements=tuple(found),
    )
