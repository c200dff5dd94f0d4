"""Scenario solving: equilibrium sets, selection probabilities, and bounds.

A scenario bundles a 2x2 ordinal game, its dominance constraints, the event
environment, and the two coefficient parameter sets. Solving yields a
decision report: which cells are pure Nash under the case-adjusted order,
the probabilities that each diagonal equilibrium guides the decision, the
leftover indeterminate mass, and the closed-form bounds those probabilities
can never cross.

Two comparison events drive everything. "em12" is the event that the row
player's temptation payoff (top-left) outranks its dutiful payoff
(bottom-right); "pf21" is the event that the column player's strict-course
payoff (bottom-right) outranks its lenient one (top-left). Selection treats
them as independent Bernoulli draws: the top-left cell guides the decision
when em12 fires alone, the bottom-right cell when pf21 fires alone, and the
remaining mass is indeterminate.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .bayes import ComparisonEvent, EventSpace
from .constraints import (
    BOUND_LOWER,
    ConstraintSet,
    DominanceConstraint,
)
from .errors import ValidationError
from .game import CellCoord, OrdinalGame, pure_nash
from .index_model import (
    IndexParameters,
    Mode,
    PUBLISHED_TABLE,
    published_coefficient,
    reference_score,
    score_factor,
    selection_coefficient,
)

SCORE_MATCH_TOLERANCE = 1e-12

# metric columns every sweep row carries, in output order
SWEEP_METRICS = ("p_em12", "p_pf21", "p_cell_11", "p_cell_22", "indeterminate")

# sweepable scenario parameters and where they land
_PARAM_TARGETS = {
    "r": ("em_params", "weight"),
    "C": ("em_params", "score"),
    "s": ("pf_params", "weight"),
    "Q": ("pf_params", "score"),
}


class Case(Enum):
    """Evidential regime for the column player's strict course."""

    STRONG_EVIDENCE = "strong_evidence"
    WEAK_EVIDENCE = "weak_evidence"

    @classmethod
    def parse(cls, text: str) -> "Case":
        normalized = str(text).strip().lower()
        for case in cls:
            if case.value == normalized:
                return case
        raise ValidationError(
            f"unknown case {text!r}; expected 'strong_evidence' or "
            "'weak_evidence'"
        )


@dataclass(frozen=True)
class SimulationDefaults:
    """Scenario-level Monte Carlo defaults."""

    trials: int
    seed: int

    def __post_init__(self):
        if self.trials < 1:
            raise ValidationError(f"trials must be >= 1, got {self.trials!r}")


@dataclass(frozen=True)
class Scenario:
    """Everything needed to solve one decision problem."""

    name: str
    game: OrdinalGame
    constraints: ConstraintSet
    events: EventSpace
    em_params: IndexParameters
    pf_params: IndexParameters
    case: Case
    mode: Mode
    mc: Optional[SimulationDefaults] = None
    description: str = ""
    players: Tuple[str, str] = ("row", "column")

    def to_dict(self) -> Dict:
        """The canonical file-format dictionary for this scenario.

        The file format shares one variance between both coefficient
        parameter sets; the row-side variance is the one echoed.
        """
        game = self.game
        payload: Dict = {
            "name": self.name,
            "game": {
                "row_player": self.players[0],
                "col_player": self.players[1],
                "row_strategies": list(game.row_strategies),
                "col_strategies": list(game.col_strategies),
                "payoffs": [
                    [[pair[0].id, pair[1].id] for pair in row]
                    for row in game.cells
                ],
            },
            "constraints": [
                _constraint_to_dict(c) for c in self.constraints.constraints
            ],
            "events": {
                "labels": list(self.events.labels),
                "prior": list(self.events.prior),
            },
            "parameters": {
                "r": self.em_params.weight,
                "C": self.em_params.score,
                "s": self.pf_params.weight,
                "Q": self.pf_params.score,
                "variance": self.em_params.variance,
            },
            "case": self.case.value,
            "mode": self.mode.value,
        }
        if self.description:
            payload["description"] = self.description
        if self.mc is not None:
            payload["mc"] = {"trials": self.mc.trials, "seed": self.mc.seed}
        return payload


def _constraint_to_dict(c: DominanceConstraint) -> Dict:
    entry: Dict = {"left": c.left, "right": c.right, "probability": c.probability}
    if c.bound != "exact":
        entry["bound"] = c.bound
    if c.group:
        entry["group"] = c.group
    return entry


@dataclass(frozen=True)
class DecisionReport:
    """The solver's structured output; serializes losslessly to a dict."""

    scenario_name: str
    mode: str
    case: str
    p_em12: float
    p_pf21: float
    p_cell_11: float
    p_cell_22: float
    indeterminate: float
    nash_cells: Tuple[CellCoord, ...]
    undecided_cells: Tuple[CellCoord, ...]
    bounds: Mapping[str, float]
    comparison_events: Tuple[ComparisonEvent, ...]
    notes: Tuple[str, ...]
    inputs: Mapping = field(default_factory=dict)

    def to_dict(self) -> Dict:
        return {
            "scenario": dict(self.inputs),
            "mode": self.mode,
            "case": self.case,
            "results": {
                "p_em12": self.p_em12,
                "p_pf21": self.p_pf21,
                "p_cell_11": self.p_cell_11,
                "p_cell_22": self.p_cell_22,
                "indeterminate": self.indeterminate,
                "nash_cells": [list(cell) for cell in self.nash_cells],
                "undecided_cells": [list(cell) for cell in self.undecided_cells],
            },
            "bounds": dict(self.bounds),
            "comparison_events": {
                event.label: {"left": event.left, "right": event.right}
                for event in self.comparison_events
            },
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "DecisionReport":
        results = data["results"]
        return cls(
            scenario_name=data["scenario"].get("name", ""),
            mode=data["mode"],
            case=data["case"],
            p_em12=results["p_em12"],
            p_pf21=results["p_pf21"],
            p_cell_11=results["p_cell_11"],
            p_cell_22=results["p_cell_22"],
            indeterminate=results["indeterminate"],
            nash_cells=tuple(
                CellCoord(*cell) for cell in results["nash_cells"]
            ),
            undecided_cells=tuple(
                CellCoord(*cell) for cell in results["undecided_cells"]
            ),
            bounds=dict(data["bounds"]),
            comparison_events=tuple(
                ComparisonEvent(label, spec["left"], spec["right"])
                for label, spec in sorted(data["comparison_events"].items())
            ),
            notes=tuple(data["notes"]),
            inputs=dict(data["scenario"]),
        )


def _require_2x2(game: OrdinalGame):
    if game.n_rows != 2 or game.n_cols != 2:
        raise ValidationError(
            "the selection calculus needs a 2x2 game, got "
            f"{game.n_rows}x{game.n_cols}"
        )


def comparison_events(game: OrdinalGame) -> Tuple[ComparisonEvent, ComparisonEvent]:
    """The two diagonal comparison events of a 2x2 game."""
    _require_2x2(game)
    em12 = ComparisonEvent(
        "em12",
        left=game.payoff(0, 0, 0).id,
        right=game.payoff(1, 1, 0).id,
    )
    pf21 = ComparisonEvent(
        "pf21",
        left=game.payoff(1, 1, 1).id,
        right=game.payoff(0, 0, 1).id,
    )
    return em12, pf21


def effective_constraints(scenario: Scenario) -> ConstraintSet:
    """The scenario's constraint set with the evidential case applied.

    Strong evidence asserts the certain reverse of the top-row column
    assumption (the column player certainly prefers the strict course even
    against the dutiful row), so any certain constraint contradicting it is
    dropped first. Weak evidence only records a lower bound, invisible to
    the dominance order.
    """
    _require_2x2(scenario.game)
    pf11 = scenario.game.payoff(0, 0, 1).id
    pf12 = scenario.game.payoff(0, 1, 1).id
    base = scenario.constraints
    if scenario.case is Case.STRONG_EVIDENCE:
        kept = [
            c
            for c in base.constraints
            if not (c.certain and c.left == pf11 and c.right == pf12)
        ]
        kept.append(
            DominanceConstraint(pf12, pf11, 1.0, group="strong_evidence_case")
        )
        return ConstraintSet(kept, universe=base.universe)
    lower = DominanceConstraint(
        pf11, pf12, 0.5, bound=BOUND_LOWER, group="weak_evidence_case"
    )
    return base.add_constraint(lower)


def _check_mode_gate(scenario: Scenario):
    """Published mode only covers the two reference scores."""
    if scenario.mode is not Mode.PUBLISHED:
        return
    for label, params, param_name in (
        ("em12", scenario.em_params, "C"),
        ("pf21", scenario.pf_params, "Q"),
    ):
        ref = reference_score(label)
        if abs(params.score - ref) > SCORE_MATCH_TOLERANCE:
            raise ValidationError(
                f"published mode requires {param_name} = {ref:g} "
                f"(the score the published constant refers to), got "
                f"{params.score!r}; use computed mode for other scores"
            )


def _bounds(scenario: Scenario) -> Dict[str, float]:
    if scenario.mode is Mode.PUBLISHED:
        em_cap = published_coefficient("em12", scenario.mode)
        pf_cap = published_coefficient("pf21", scenario.mode)
    else:
        em_cap = score_factor(
            scenario.em_params.score, scenario.em_params.variance
        )
        pf_cap = score_factor(
            scenario.pf_params.score, scenario.pf_params.variance
        )
    return {
        "p_em12_cap": em_cap,
        "p_pf21_weak_cap": pf_cap,
        "p_cell_11_cap": em_cap,
        "p_cell_22_weak_cap": pf_cap,
        "p_cell_22_strong_floor": 1.0 - em_cap,
    }


def _divergence_notes(scenario: Scenario) -> List[str]:
    notes = []
    for label, params in (
        ("em12", scenario.em_params),
        ("pf21", scenario.pf_params),
    ):
        ref_score, constant = PUBLISHED_TABLE[label]
        if abs(params.score - ref_score) > SCORE_MATCH_TOLERANCE:
            continue
        formula_value = score_factor(params.score, params.variance)
        if scenario.mode is Mode.PUBLISHED:
            used, other = "the published constant", "the formula value"
        else:
            used, other = "the formula value", "the published constant"
        notes.append(
            f"{label}: published constant {constant:.6g} at score "
            f"{ref_score:g} diverges from the formula value "
            f"{formula_value:.6g}; this report uses {used}, not {other}"
        )
    return notes


def _is_uniform_three(space: EventSpace) -> bool:
    return len(space) == 3 and all(p == space.prior[0] for p in space.prior)


def solve(scenario: Scenario) -> DecisionReport:
    """Solve one scenario into a decision report."""
    _require_2x2(scenario.game)
    _check_mode_gate(scenario)
    em_event, pf_event = comparison_events(scenario.game)
    order = effective_constraints(scenario)
    nash, undecided = pure_nash(scenario.game, order)

    if scenario.mode is Mode.PUBLISHED:
        p_em12 = scenario.em_params.weight * published_coefficient(
            "em12", scenario.mode
        )
    else:
        p_em12 = selection_coefficient(scenario.em_params)

    if scenario.case is Case.STRONG_EVIDENCE:
        # certainty chain: strict-course payoff beats the lenient one beats
        # the dutiful-cell one, each link independent
        pf12 = scenario.game.payoff(0, 1, 1).id
        chain = [(pf_event.left, pf12), (pf12, pf_event.right)]
        p_pf21 = order.independent_chain_probability(chain)
    elif scenario.mode is Mode.PUBLISHED:
        p_pf21 = scenario.pf_params.weight * published_coefficient(
            "pf21", scenario.mode
        )
    else:
        p_pf21 = selection_coefficient(scenario.pf_params)

    p_cell_11 = p_em12 * (1.0 - p_pf21)
    p_cell_22 = p_pf21 * (1.0 - p_em12)
    indeterminate = 1.0 - p_cell_11 - p_cell_22

    notes = _divergence_notes(scenario)
    if scenario.case is Case.STRONG_EVIDENCE:
        pf11 = scenario.game.payoff(0, 0, 1).id
        pf12 = scenario.game.payoff(0, 1, 1).id
        notes.append(
            f"strong evidence: certain {pf12} > {pf11} applied; any certain "
            f"{pf11} > {pf12} assumption is dropped for consistency"
        )
    else:
        pf11 = scenario.game.payoff(0, 0, 1).id
        pf12 = scenario.game.payoff(0, 1, 1).id
        notes.append(
            f"weak evidence: p({pf11} > {pf12}) > 0.5 recorded as a lower "
            "bound; lower bounds never enter the dominance order"
        )
    if not _is_uniform_three(scenario.events):
        notes.append(
            "selection coefficients assume a uniform three-event "
            "environment; this scenario's event space deviates from it"
        )
    diagonal = {CellCoord(0, 0), CellCoord(1, 1)}
    if set(nash) != diagonal:
        notes.append(
            "p_cell_11 and p_cell_22 refer to the diagonal cells (0,0) and "
            f"(1,1); this order's equilibrium set is "
            f"{sorted(tuple(c) for c in nash)}"
        )

    return DecisionReport(
        scenario_name=scenario.name,
        mode=scenario.mode.value,
        case=scenario.case.value,
        p_em12=p_em12,
        p_pf21=p_pf21,
        p_cell_11=p_cell_11,
        p_cell_22=p_cell_22,
        indeterminate=indeterminate,
        nash_cells=tuple(sorted(nash)),
        undecided_cells=tuple(sorted(undecided)),
        bounds=_bounds(scenario),
        comparison_events=(em_event, pf_event),
        notes=tuple(notes),
        inputs=scenario.to_dict(),
    )


def with_parameters(scenario: Scenario, overrides: Mapping[str, float]) -> Scenario:
    """A copy of the scenario with some of r, s, C, Q replaced."""
    updates: Dict[str, Dict[str, float]] = {}
    for name, value in overrides.items():
        if name not in _PARAM_TARGETS:
            raise ValidationError(
                f"unknown parameter {name!r}; sweepable parameters: "
                f"{', '.join(sorted(_PARAM_TARGETS))}"
            )
        attr, fieldname = _PARAM_TARGETS[name]
        updates.setdefault(attr, {})[fieldname] = value
    changes: Dict[str, IndexParameters] = {}
    for attr, fields in updates.items():
        changes[attr] = replace(getattr(scenario, attr), **fields)
    return replace(scenario, **changes)


def sweep(
    scenario: Scenario, grid: Mapping[str, Sequence[float]]
) -> Tuple[List[str], List[List[float]]]:
    """Solve the scenario across a parameter grid.

    Returns (columns, rows). Parameters iterate in sorted name order and the
    rows enumerate value combinations lexicographically, so output order is
    reproducible regardless of how the grid was supplied.
    """
    if not grid:
        raise ValidationError("sweep grid is empty")
    names = sorted(grid)
    for name in names:
        if name not in _PARAM_TARGETS:
            raise ValidationError(
                f"unknown parameter {name!r}; sweepable parameters: "
                f"{', '.join(sorted(_PARAM_TARGETS))}"
            )
        if not grid[name]:
            raise ValidationError(f"parameter {name!r} has no grid values")
    columns = names + list(SWEEP_METRICS)
    rows: List[List[float]] = []
    for combo in itertools.product(*(grid[name] for name in names)):
        point = with_parameters(scenario, dict(zip(names, combo)))
        report = solve(point)
        rows.append(
            list(combo) + [getattr(report, metric) for metric in SWEEP_METRICS]
        )
    return columns, rows
