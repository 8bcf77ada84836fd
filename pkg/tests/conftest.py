import json
import math
from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

from cyclicquad.errors import GeometryError
from cyclicquad.quadrilateral import OrderedQuadruple

FROZEN = json.loads((Path(__file__).parent / "data" / "frozen_oracles.json").read_text())


def pt(pair) -> complex:
    return complex(*pair)


def random_quads(n: int, seed: int, min_gap_deg: float = 0.0) -> list[OrderedQuadruple]:
    """``n`` counterclockwise quadruples from sorted uniform angles."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < n:
        ang = np.sort(rng.uniform(0.0, 2 * math.pi, 4))
        gaps = np.diff(np.append(ang, ang[0] + 2 * math.pi))
        if np.min(gaps) <= math.radians(min_gap_deg):
            continue
        try:
            out.append(OrderedQuadruple.from_angles(ang))
        except GeometryError:
            continue
    return out


def random_disk(rng, n: int, rmax: float = 0.98) -> np.ndarray:
    r = rmax * np.sqrt(rng.random(n))
    return r * np.exp(2j * math.pi * rng.random(n))


@st.composite
def quads(draw, min_gap_deg: float = 2.0):
    """Hypothesis strategy: four gaps of at least ``min_gap_deg`` around the circle."""
    raw = [draw(st.floats(0.05, 1.0)) for _ in range(4)]
    free = 360.0 - 4 * min_gap_deg
    gaps = [min_gap_deg + free * r / sum(raw) for r in raw]
    start = draw(st.floats(0.0, 360.0))
    angles = [start + sum(gaps[:i]) for i in range(4)]
    return OrderedQuadruple.from_angles(angles, degrees=True)


@st.composite
def disk_points(draw, rmax: float = 0.95):
    r = draw(st.floats(0.0, rmax))
    t = draw(st.floats(0.0, 2 * math.pi))
    return complex(r * math.cos(t), r * math.sin(t))


@pytest.fixture
def square() -> OrderedQuadruple:
    return OrderedQuadruple(1, 1j, -1, -1j)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
