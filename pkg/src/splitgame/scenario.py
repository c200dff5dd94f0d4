"""Scenario files: schema validation, parsing, and the bundled dilemma.

Scenario files are JSON documents validated against the schema shipped at
``splitgame/resources/scenario.schema.json`` (unknown fields are rejected
with the offending path named), then checked semantically: symbols must be
unique and covered by the game, priors must sum to one, weights must sit
strictly inside (0, 1).
"""
from __future__ import annotations

import json
from importlib import resources as importlib_resources
from typing import Dict, Mapping, Optional, Union

import jsonschema

from .bayes import EventSpace
from .constraints import ConstraintSet, DominanceConstraint
from .errors import ValidationError
from .game import OrdinalGame
from .index_model import DEFAULT_VARIANCE, IndexParameters, Mode
from .solver import Case, Scenario, SimulationDefaults

_schema_cache: Optional[Dict] = None


def scenario_schema() -> Dict:
    """The published JSON schema for scenario files."""
    global _schema_cache
    if _schema_cache is None:
        payload = (
            importlib_resources.files("splitgame.resources")
            .joinpath("scenario.schema.json")
            .read_text(encoding="utf-8")
        )
        _schema_cache = json.loads(payload)
    return _schema_cache


def load_scenario(path) -> Scenario:
    """Read and validate a scenario file."""
    with open(path, "r", encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"{path}: not valid JSON: {exc}") from None
    return scenario_from_dict(data, source=str(path))


def scenario_from_dict(data: Mapping, source: str = "<scenario>") -> Scenario:
    """Build a scenario from an already-parsed document."""
    validator = jsonschema.Draft202012Validator(scenario_schema())
    errors = sorted(
        validator.iter_errors(data), key=lambda err: list(err.absolute_path)
    )
    if errors:
        first = errors[0]
        where = "/".join(str(part) for part in first.absolute_path) or "<root>"
        raise ValidationError(f"{source}: {where}: {first.message}")

    game_data = data["game"]
    game = OrdinalGame.from_ids(
        game_data["row_strategies"],
        game_data["col_strategies"],
        [[tuple(pair) for pair in row] for row in game_data["payoffs"]],
    )
    constraints = ConstraintSet(
        (
            DominanceConstraint(
                entry["left"],
                entry["right"],
                entry["probability"],
                bound=entry.get("bound", "exact"),
                group=entry.get("group"),
            )
            for entry in data["constraints"]
        ),
        universe=game.symbol_ids(),
    )
    events = EventSpace(
        tuple(data["events"]["labels"]),
        tuple(float(p) for p in data["events"]["prior"]),
    )
    params = data["parameters"]
    variance = float(params.get("variance", DEFAULT_VARIANCE))
    em_params = IndexParameters(
        score=float(params["C"]), weight=float(params["r"]), variance=variance
    )
    pf_params = IndexParameters(
        score=float(params["Q"]), weight=float(params["s"]), variance=variance
    )
    mc = None
    if "mc" in data:
        mc = SimulationDefaults(
            trials=int(data["mc"]["trials"]), seed=int(data["mc"]["seed"])
        )
    return Scenario(
        name=data["name"],
        game=game,
        constraints=constraints,
        events=events,
        em_params=em_params,
        pf_params=pf_params,
        case=Case.parse(data["case"]),
        mode=Mode.parse(data["mode"]),
        mc=mc,
        description=data.get("description", ""),
        players=(game_data["row_player"], game_data["col_player"]),
    )


# ---------------------------------------------------------------------------
# the bundled dilemma: an officer weighing a bribe for leniency (row side,
# family payoffs) against booking the offender on the strict course (column
# side, professional payoffs)
# ---------------------------------------------------------------------------

IPD_BASE_RELATIONS = (
    ("EM11", "EM21"),
    ("EM11", "EM12"),
    ("EM22", "EM12"),
    ("PF11", "PF21"),
    ("EM22", "EM21"),
    ("PF22", "PF12"),
)

IPD_COLUMN_ASSUMPTIONS = (
    ("PF11", "PF12"),
    ("PF22", "PF21"),
)

COLUMN_ASSUMPTION_GROUP = "column_best_response_assumptions"

IPD_EVENT_LABELS = (
    "scholarship_offer",
    "desired_promotion",
    "undesired_promotion",
)

IPD_MC_DEFAULTS = SimulationDefaults(trials=1_000_000, seed=123456)


def ipd_scenario(
    case: Union[Case, str] = Case.WEAK_EVIDENCE,
    mode: Union[Mode, str] = Mode.PUBLISHED,
    r: float = 0.5,
    s: float = 0.5,
) -> Scenario:
    """The bundled dilemma, identical to ``scenarios/ipd.json``.

    The six base relations leave the column player's own-axis comparisons
    open, so the two comparisons needed for the intended equilibrium pair
    ship as explicit, separately grouped assumptions rather than silent
    engine behavior.
    """
    if isinstance(case, str):
        case = Case.parse(case)
    if isinstance(mode, str):
        mode = Mode.parse(mode)
    game = OrdinalGame.from_ids(
        ("Fatherhood", "Promotion"),
        ("L1", "L2"),
        [
            [("EM11", "PF11"), ("EM12", "PF12")],
            [("EM21", "PF21"), ("EM22", "PF22")],
        ],
    )
    constraints = ConstraintSet(
        tuple(
            DominanceConstraint(left, right, 1.0)
            for left, right in IPD_BASE_RELATIONS
        )
        + tuple(
            DominanceConstraint(
                left, right, 1.0, group=COLUMN_ASSUMPTION_GROUP
            )
            for left, right in IPD_COLUMN_ASSUMPTIONS
        ),
        universe=game.symbol_ids(),
    )
    return Scenario(
        name="ipd",
        game=game,
        constraints=constraints,
        events=EventSpace.uniform(IPD_EVENT_LABELS),
        em_params=IndexParameters(score=3.4, weight=r),
        pf_params=IndexParameters(score=6.5, weight=s),
        case=case,
        mode=mode,
        mc=IPD_MC_DEFAULTS,
        description=(
            "An officer torn between a bribe that funds his son's studies "
            "and booking the offender under the stricter law. Family payoffs "
            "sit on the row side, professional payoffs on the column side; "
            "only ordinal relations between payoffs are known."
        ),
        players=("Emotion", "Profession"),
    )
