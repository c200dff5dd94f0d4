"""Ordinal dilemma toolkit.

Splitgame models 2x2 ordinal games whose payoffs are opaque symbols owned
by a "split" player: an emotional row self and a professional column self.
Dominance knowledge between symbols may be certain, merely probable, or
absent, and every query answers True, False, or None accordingly. On top
of that three-valued core the package layers Bayesian evidence updates, a
Gaussian-tail misjudgement index, closed-form equilibrium selection
probabilities, Monte Carlo cross-checks, and scoring for the seven-item
professionalism survey instrument.
"""
from .bayes import (
    ComparisonEvent,
    EventSpace,
    fixed_point_posterior,
    marginal_probability,
    posterior,
    posterior_update_map,
)
from .constraints import (
    BOUND_EXACT,
    BOUND_LOWER,
    ConstraintSet,
    DominanceConstraint,
    SAMPLING_ATTEMPT_CAP,
)
from .errors import (
    DomainError,
    InconsistentOrderError,
    MissingProbabilityError,
    SamplingExhaustedError,
    SplitgameError,
    UnknownSymbolError,
    ValidationError,
    ZeroEvidenceError,
)
from .game import (
    CellCoord,
    DominanceOracle,
    NumericOrder,
    OrdinalGame,
    PayoffSymbol,
    PLAYER_COL,
    PLAYER_ROW,
    UNDECIDED,
    best_responses,
    pure_nash,
)
from .index_model import (
    IndexParameters,
    Mode,
    PUBLISHED_TABLE,
    gaussian_tail,
    published_coefficient,
    reference_score,
    score_factor,
    selection_coefficient,
)
from .montecarlo import (
    Disagreement,
    NashVerification,
    SimulationConfig,
    SimulationResult,
    numeric_pure_nash,
    simulate_selection,
    verify_nash_numeric,
)
from .scenario import ipd_scenario, load_scenario, scenario_from_dict
from .solver import (
    Case,
    DecisionReport,
    Scenario,
    SimulationDefaults,
    comparison_events,
    effective_constraints,
    solve,
    sweep,
    with_parameters,
)
from .survey import (
    Instrument,
    PIndexScore,
    SurveyItem,
    SurveyResponse,
    aggregate,
    canonical_instrument,
    load_instrument,
    read_responses_csv,
    score_response,
)

__version__ = "0.1.0"

__all__ = [
    "BOUND_EXACT",
    "BOUND_LOWER",
    "Case",
    "CellCoord",
    "ComparisonEvent",
    "ConstraintSet",
    "DecisionReport",
    "Disagreement",
    "DominanceConstraint",
    "DominanceOracle",
    "DomainError",
    "EventSpace",
    "IndexParameters",
    "InconsistentOrderError",
    "Instrument",
    "MissingProbabilityError",
    "Mode",
    "NashVerification",
    "NumericOrder",
    "OrdinalGame",
    "PIndexScore",
    "PLAYER_COL",
    "PLAYER_ROW",
    "PUBLISHED_TABLE",
    "PayoffSymbol",
    "SAMPLING_ATTEMPT_CAP",
    "SamplingExhaustedError",
    "Scenario",
    "SimulationConfig",
    "SimulationDefaults",
    "SimulationResult",
    "SplitgameError",
    "SurveyItem",
    "SurveyResponse",
    "UNDECIDED",
    "UnknownSymbolError",
    "ValidationError",
    "ZeroEvidenceError",
    "aggregate",
    "best_responses",
    "canonical_instrument",
    "comparison_events",
    "effective_constraints",
    "fixed_point_posterior",
    "gaussian_tail",
    "ipd_scenario",
    "load_instrument",
    "load_scenario",
    "marginal_probability",
    "numeric_pure_nash",
    "posterior",
    "posterior_update_map",
    "published_coefficient",
    "pure_nash",
    "read_responses_csv",
    "reference_score",
    "scenario_from_dict",
    "score_factor",
    "score_response",
    "selection_coefficient",
    "simulate_selection",
    "solve",
    "sweep",
    "verify_nash_numeric",
    "with_parameters",
]
