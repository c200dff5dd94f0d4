import math
from pathlib import Path

import pytest

from splitgame import ConstraintSet, ipd_scenario

REPO_ROOT = Path(__file__).resolve().parent.parent


def erfc_tail(lower: float, variance: float = 10.0) -> float:
    """Independent closed-form oracle for the upper Gaussian tail."""
    return 0.5 * math.erfc(lower / math.sqrt(2.0 * variance))


@pytest.fixture(scope="session")
def ipd_path() -> str:
    return str(REPO_ROOT / "scenarios" / "ipd.json")


@pytest.fixture
def ipd():
    return ipd_scenario()


@pytest.fixture
def ipd_game(ipd):
    return ipd.game


@pytest.fixture
def ipd_constraints(ipd) -> ConstraintSet:
    """All eight shipped constraints (six relations + two assumptions)."""
    return ipd.constraints


@pytest.fixture
def ipd_base_constraints(ipd) -> ConstraintSet:
    """Only the six ungrouped relations that follow from the matrix."""
    base = [c for c in ipd.constraints.constraints if c.group is None]
    assert len(base) == 6
    return ConstraintSet(base, universe=ipd.constraints.universe)
