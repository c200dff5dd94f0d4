"""Scoring for the seven-item agreement survey onto a 10-point index.

Each item offers six agreement choices, a (strongly disagree) through
f (strongly agree). Positive items score the choice position 1..6 directly;
negative items reverse it. The raw sum is rescaled so the least professional
response set maps to 0 and the most professional to 10.
"""
from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from importlib import resources as importlib_resources
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .errors import ValidationError

POSITIVE = "positive"
NEGATIVE = "negative"

CHOICES = ("a", "b", "c", "d", "e", "f")
SCALE_STEPS = len(CHOICES)
INDEX_MAX = 10.0

Choice = Union[str, int]


@dataclass(frozen=True)
class SurveyItem:
    index: int
    text: str
    polarity: str

    def __post_init__(self):
        if self.index < 1:
            raise ValidationError(f"item index must be >= 1, got {self.index!r}")
        if self.polarity not in (POSITIVE, NEGATIVE):
            raise ValidationError(
                f"item {self.index}: polarity must be '{POSITIVE}' or "
                f"'{NEGATIVE}', got {self.polarity!r}"
            )


@dataclass(frozen=True)
class Instrument:
    """A versioned set of survey items with fixed indices 1..n."""

    version: int
    name: str
    items: Tuple[SurveyItem, ...]

    def __post_init__(self):
        if not self.items:
            raise ValidationError("instrument needs at least one item")
        expected = list(range(1, len(self.items) + 1))
        if [item.index for item in self.items] != expected:
            raise ValidationError(
                "instrument items must be numbered contiguously from 1"
            )

    def __len__(self):
        return len(self.items)

    @property
    def min_raw(self) -> int:
        return len(self.items)

    @property
    def max_raw(self) -> int:
        return SCALE_STEPS * len(self.items)


_canonical: Optional[Instrument] = None


def canonical_instrument() -> Instrument:
    """The bundled seven-item instrument (items 1, 3, 7 positive)."""
    global _canonical
    if _canonical is None:
        payload = (
            importlib_resources.files("splitgame.resources")
            .joinpath("instrument.json")
            .read_text(encoding="utf-8")
        )
        _canonical = instrument_from_dict(json.loads(payload))
    return _canonical


def instrument_from_dict(data: Mapping) -> Instrument:
    try:
        items = tuple(
            SurveyItem(entry["index"], entry["text"], entry["polarity"])
            for entry in data["items"]
        )
        return Instrument(data["version"], data.get("name", "instrument"), items)
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"malformed instrument definition: {exc}") from None


def load_instrument(path) -> Instrument:
    with open(path, "r", encoding="utf-8") as handle:
        return instrument_from_dict(json.load(handle))


def _choice_position(choice: Choice) -> int:
    """Normalize a choice (letter a-f, or 1-6 numeric) to position 1..6."""
    if isinstance(choice, str):
        token = choice.strip().lower()
        if token in CHOICES:
            return CHOICES.index(token) + 1
        if token.isdigit():
            choice = int(token)
        else:
            raise ValidationError(
                f"invalid choice {choice!r}; expected a-f or 1-6"
            )
    if isinstance(choice, int) and not isinstance(choice, bool):
        if 1 <= choice <= SCALE_STEPS:
            return choice
    raise ValidationError(f"invalid choice {choice!r}; expected a-f or 1-6")


def score_item(item: SurveyItem, choice: Choice) -> int:
    """Points for one answered item: position for positive, reversed otherwise."""
    position = _choice_position(choice)
    if item.polarity == POSITIVE:
        return position
    return SCALE_STEPS + 1 - position


@dataclass(frozen=True)
class SurveyResponse:
    """Answers keyed by item index; completeness is checked against an
    instrument at scoring time, missing answers are never imputed."""

    answers: Mapping[int, Choice]

    def __post_init__(self):
        object.__setattr__(self, "answers", dict(self.answers))
        for key in self.answers:
            if not isinstance(key, int) or isinstance(key, bool):
                raise ValidationError(f"item index {key!r} must be an integer")


@dataclass(frozen=True)
class PIndexScore:
    """A scored response: integer raw sum and the 10-point index."""

    raw_sum: int
    p_index: float
    n_items: int = 7

    def __post_init__(self):
        low, high = self.n_items, SCALE_STEPS * self.n_items
        if not low <= self.raw_sum <= high:
            raise ValidationError(
                f"raw sum {self.raw_sum!r} outside [{low}, {high}]"
            )
        if not 0.0 <= self.p_index <= INDEX_MAX:
            raise ValidationError(
                f"index {self.p_index!r} outside [0, {INDEX_MAX:g}]"
            )


def score_response(
    response: SurveyResponse, instrument: Optional[Instrument] = None
) -> PIndexScore:
    """Score a complete response.

    Every instrument item must be answered, with no extras. The index is
    10 * (raw - n) / (5 * n), so the all-minimum response maps to 0 and the
    all-maximum response to 10 exactly.
    """
    instrument = instrument or canonical_instrument()
    expected = {item.index for item in instrument.items}
    answered = set(response.answers)
    missing = sorted(expected - answered)
    if missing:
        raise ValidationError(f"unanswered items: {missing}")
    extra = sorted(answered - expected)
    if extra:
        raise ValidationError(f"answers for unknown items: {extra}")
    raw = sum(
        score_item(item, response.answers[item.index])
        for item in instrument.items
    )
    n = len(instrument)
    p_index = INDEX_MAX * (raw - n) / ((SCALE_STEPS - 1) * n)
    return PIndexScore(raw_sum=raw, p_index=p_index, n_items=n)


def aggregate(
    responses: Sequence[SurveyResponse],
    instrument: Optional[Instrument] = None,
) -> float:
    """Mean index over a cohort of complete responses."""
    if not responses:
        raise ValidationError("cannot aggregate zero responses")
    instrument = instrument or canonical_instrument()
    scores = [score_response(resp, instrument) for resp in responses]
    return sum(score.p_index for score in scores) / len(scores)


def csv_header(instrument: Optional[Instrument] = None) -> List[str]:
    instrument = instrument or canonical_instrument()
    return ["respondent_id"] + [f"item{item.index}" for item in instrument.items]


def read_responses_csv(
    path,
    instrument: Optional[Instrument] = None,
    lenient: bool = False,
) -> Tuple[List[Tuple[str, SurveyResponse]], List[str]]:
    """Parse a respondent CSV into (respondent id, response) pairs.

    The header must be respondent_id,item1,...,itemN. Cell values are the
    choice letters (case-insensitive) or the digits 1-6. A malformed row
    raises with its line number; under ``lenient`` it is skipped instead and
    reported in the returned warning list.
    """
    instrument = instrument or canonical_instrument()
    expected_header = csv_header(instrument)
    rows: List[Tuple[str, SurveyResponse]] = []
    warnings: List[str] = []

    with open(path, "r", encoding="utf-8", newline="") as handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise ValidationError(f"{path}: empty file") from None
        normalized = [column.strip().lower() for column in header]
        if normalized != expected_header:
            raise ValidationError(
                f"{path}: header must be {','.join(expected_header)}, "
                f"got {','.join(header)}"
            )
        for lineno, row in enumerate(reader, start=2):
            if not row or all(not cell.strip() for cell in row):
                continue
            try:
                rows.append((_parse_row(row, lineno, instrument)))
            except ValidationError as exc:
                if lenient:
                    warnings.append(f"line {lineno}: skipped ({exc})")
                else:
                    raise ValidationError(f"{path}: line {lineno}: {exc}") from None

    if not rows and not lenient:
        raise ValidationError(f"{path}: no data rows")
    return rows, warnings


def _parse_row(row, lineno, instrument) -> Tuple[str, SurveyResponse]:
    expected_len = len(instrument) + 1
    if len(row) != expected_len:
        raise ValidationError(
            f"{len(row)} fields, expected {expected_len}"
        )
    respondent = row[0].strip()
    if not respondent:
        raise ValidationError("empty respondent_id")
    answers: Dict[int, Choice] = {}
    for item, cell in zip(instrument.items, row[1:]):
        _choice_position(cell)  # raises on malformed cells
        answers[item.index] = cell.strip().lower()
    return respondent, SurveyResponse(answers)
