"""Command-line interface: solve, sweep, score, simulate.

Machine output (report JSON, sweep CSV, score CSV) goes to --out or stdout
at full float precision; human-readable summaries go to stderr rounded to
six significant digits.

Exit codes are stable:
  0  success
  2  usage errors (argparse)
  3  I/O failures (missing or unreadable files)
  4  validation errors (schemas, malformed rows, grids, mode gates)
  5  inconsistent certain order (a dominance cycle)
  6  numeric-domain errors (weights, scores, priors, sampling exhaustion)
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import replace
from typing import Dict, List, Optional, Sequence

from .errors import (
    DomainError,
    InconsistentOrderError,
    SplitgameError,
    ValidationError,
)
from .index_model import Mode
from .montecarlo import SimulationConfig, simulate_selection
from .scenario import load_scenario
from .solver import solve, sweep
from .survey import canonical_instrument, read_responses_csv, score_response

EXIT_OK = 0
EXIT_IO = 3
EXIT_VALIDATION = 4
EXIT_INCONSISTENT = 5
EXIT_DOMAIN = 6

_MODE_CHOICES = ("computed", "published", "paper")

_EXIT_CODE_DOC = """\
exit codes:
  0  success
  2  usage errors
  3  I/O failures
  4  validation errors (schemas, malformed rows, grids, mode gates)
  5  inconsistent certain order (dominance cycle)
  6  numeric-domain errors (weights, scores, priors, sampling exhaustion)
"""


def _fmt(value: float) -> str:
    return f"{value:.6g}"


def _emit(text: str, out_path: Optional[str]):
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _load(scenario_path: str, mode_override: Optional[str]):
    scenario = load_scenario(scenario_path)
    if mode_override:
        scenario = replace(scenario, mode=Mode.parse(mode_override))
    return scenario


def cmd_solve(
    scenario_path: str,
    mode_override: Optional[str] = None,
    out_path: Optional[str] = None,
) -> int:
    scenario = _load(scenario_path, mode_override)
    report = solve(scenario)
    _emit(json.dumps(report.to_dict(), indent=2) + "\n", out_path)

    err = sys.stderr
    print(
        f"scenario {report.scenario_name}: case={report.case} "
        f"mode={report.mode}",
        file=err,
    )
    print(
        f"  p_em12={_fmt(report.p_em12)}  p_pf21={_fmt(report.p_pf21)}",
        file=err,
    )
    print(
        f"  p_cell_11={_fmt(report.p_cell_11)}  "
        f"p_cell_22={_fmt(report.p_cell_22)}  "
        f"indeterminate={_fmt(report.indeterminate)}",
        file=err,
    )
    cells = " ".join(f"({r},{c})" for r, c in report.nash_cells) or "none"
    pending = " ".join(f"({r},{c})" for r, c in report.undecided_cells) or "none"
    print(f"  nash cells: {cells}; undecided: {pending}", file=err)
    bounds = "  ".join(
        f"{name}={_fmt(value)}" for name, value in report.bounds.items()
    )
    print(f"  bounds: {bounds}", file=err)
    for note in report.notes:
        print(f"  note: {note}", file=err)
    return EXIT_OK


def _parse_grid_specs(specs: Sequence[str]) -> Dict[str, List[float]]:
    grid: Dict[str, List[float]] = {}
    for spec in specs:
        name, sep, rest = spec.partition("=")
        name = name.strip()
        parts = rest.split(":")
        if not sep or not name or len(parts) != 3:
            raise ValidationError(
                f"grid spec {spec!r} must look like param=start:stop:step"
            )
        try:
            start, stop, step = (float(part) for part in parts)
        except ValueError:
            raise ValidationError(
                f"grid spec {spec!r} has non-numeric bounds"
            ) from None
        if step <= 0:
            raise ValidationError(f"grid spec {spec!r}: step must be positive")
        if stop < start:
            raise ValidationError(f"grid spec {spec!r}: stop is below start")
        if name in grid:
            raise ValidationError(f"parameter {name!r} given twice")
        span = (stop - start) / step
        count = int(round(span))
        if abs(span - count) > 1e-9:
            count = int(math.floor(span + 1e-9))
        grid[name] = [start + i * step for i in range(count + 1)]
    return grid


def cmd_sweep(
    scenario_path: str,
    grid_specs: Sequence[str],
    mode_override: Optional[str] = None,
    out_path: Optional[str] = None,
) -> int:
    scenario = _load(scenario_path, mode_override)
    grid = _parse_grid_specs(grid_specs)
    columns, rows = sweep(scenario, grid)

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([repr(value) for value in row])
    _emit(buffer.getvalue(), out_path)
    print(
        f"sweep: {len(rows)} rows over {', '.join(sorted(grid))}",
        file=sys.stderr,
    )
    return EXIT_OK


def cmd_score(
    survey_csv_path: str,
    out_path: Optional[str] = None,
    lenient: bool = False,
) -> int:
    instrument = canonical_instrument()
    rows, warnings = read_responses_csv(
        survey_csv_path, instrument, lenient=lenient
    )
    for warning in warnings:
        print(f"warning: {warning}", file=sys.stderr)
    if not rows:
        raise ValidationError(f"{survey_csv_path}: no valid data rows")

    scored = [
        (respondent, score_response(response, instrument))
        for respondent, response in rows
    ]
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["respondent_id", "raw_sum", "p_index"])
    for respondent, score in scored:
        writer.writerow([respondent, score.raw_sum, repr(score.p_index)])
    _emit(buffer.getvalue(), out_path)

    mean = sum(score.p_index for _, score in scored) / len(scored)
    print(
        f"aggregate p-index over {len(scored)} respondents: {_fmt(mean)}",
        file=sys.stderr,
    )
    return EXIT_OK


def cmd_simulate(
    scenario_path: str,
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    mode_override: Optional[str] = None,
    out_path: Optional[str] = None,
) -> int:
    scenario = _load(scenario_path, mode_override)
    report = solve(scenario)
    if trials is None:
        trials = scenario.mc.trials if scenario.mc else 100_000
    if seed is None:
        seed = scenario.mc.seed if scenario.mc else 0
    config = SimulationConfig(
        trials=trials, seed=seed, p_em12=report.p_em12, p_pf21=report.p_pf21
    )
    result = simulate_selection(config)

    closed = {
        "p_cell_11": report.p_cell_11,
        "p_cell_22": report.p_cell_22,
        "indeterminate": report.indeterminate,
    }
    empirical = {
        "freq_cell_11": result.freq_cell_11,
        "freq_cell_22": result.freq_cell_22,
        "freq_indeterminate": result.freq_indeterminate,
    }
    payload = {
        "scenario": report.scenario_name,
        "mode": report.mode,
        "case": report.case,
        "closed_form": closed,
        "empirical": {
            **empirical,
            "trials": result.trials,
            "seed": result.seed,
            "algorithm": result.algorithm,
            "standard_error": result.standard_error,
        },
        "difference": {
            key: empirical[emp_key] - closed[key]
            for key, emp_key in (
                ("p_cell_11", "freq_cell_11"),
                ("p_cell_22", "freq_cell_22"),
                ("indeterminate", "freq_indeterminate"),
            )
        },
    }
    _emit(json.dumps(payload, indent=2) + "\n", out_path)

    err = sys.stderr
    print(
        f"simulate: {result.trials} trials, seed {result.seed} "
        f"({result.algorithm})",
        file=err,
    )
    print(f"  {'':<14}{'closed':>12}{'empirical':>12}", file=err)
    for label, closed_value, emp_value in (
        ("cell (0,0)", closed["p_cell_11"], empirical["freq_cell_11"]),
        ("cell (1,1)", closed["p_cell_22"], empirical["freq_cell_22"]),
        ("indeterminate", closed["indeterminate"], empirical["freq_indeterminate"]),
    ):
        print(
            f"  {label:<14}{_fmt(closed_value):>12}{_fmt(emp_value):>12}",
            file=err,
        )
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splitgame",
        description=(
            "Ordinal dilemma toolkit: equilibrium selection under "
            "probabilistic dominance, parameter sweeps, survey scoring, "
            "and Monte Carlo checks."
        ),
        epilog=_EXIT_CODE_DOC,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve_p = sub.add_parser(
        "solve",
        help="solve a scenario file into a decision report (JSON)",
    )
    solve_p.add_argument("--scenario", required=True, help="scenario JSON file")
    solve_p.add_argument(
        "--mode",
        choices=_MODE_CHOICES,
        help="override the scenario's evaluation mode "
        "(paper is an alias for published)",
    )
    solve_p.add_argument("--out", help="write the report here instead of stdout")

    sweep_p = sub.add_parser(
        "sweep",
        help="solve across a parameter grid and emit a CSV table",
        description=(
            "Grids iterate in sorted parameter-name order, values "
            "lexicographically; endpoints are inclusive. The CSV is "
            "plot-ready; rendering is external."
        ),
    )
    sweep_p.add_argument("--scenario", required=True, help="scenario JSON file")
    sweep_p.add_argument(
        "--grid",
        action="append",
        required=True,
        metavar="PARAM=START:STOP:STEP",
        help="sweep one of r, s, C, Q (repeatable)",
    )
    sweep_p.add_argument("--mode", choices=_MODE_CHOICES, help="mode override")
    sweep_p.add_argument("--out", help="write the CSV here instead of stdout")

    score_p = sub.add_parser(
        "score",
        help="score survey responses (CSV: respondent_id,item1..item7)",
    )
    score_p.add_argument("survey_csv", help="survey responses CSV file")
    score_p.add_argument("--out", help="write per-respondent CSV here")
    score_p.add_argument(
        "--lenient",
        action="store_true",
        help="skip malformed rows (reported with line numbers) "
        "instead of failing",
    )

    sim_p = sub.add_parser(
        "simulate",
        help="compare closed-form selection probabilities with "
        "Monte Carlo frequencies",
    )
    sim_p.add_argument("--scenario", required=True, help="scenario JSON file")
    sim_p.add_argument("--trials", type=int, help="number of trials")
    sim_p.add_argument("--seed", type=int, help="generator seed")
    sim_p.add_argument("--mode", choices=_MODE_CHOICES, help="mode override")
    sim_p.add_argument("--out", help="write the JSON here instead of stdout")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "solve":
            return cmd_solve(args.scenario, args.mode, args.out)
        if args.command == "sweep":
            return cmd_sweep(args.scenario, args.grid, args.mode, args.out)
        if args.command == "score":
            return cmd_score(args.survey_csv, args.out, args.lenient)
        if args.command == "simulate":
            return cmd_simulate(
                args.scenario, args.trials, args.seed, args.mode, args.out
            )
        raise AssertionError(f"unhandled command {args.command!r}")
    except InconsistentOrderError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except SplitgameError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
