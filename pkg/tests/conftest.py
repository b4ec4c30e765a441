import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from equistick.arcpres import validate

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

TREFOIL = [(1, 3), (2, 4), (3, 5), (1, 4), (2, 5)]


def random_presentation(n, rng):
    """A random single-cycle arc presentation on n binding indices."""
    cycle = list(range(1, n + 1))
    rng.shuffle(cycle)
    arcs = [tuple(sorted((cycle[k], cycle[(k + 1) % n]))) for k in range(n)]
    rng.shuffle(arcs)
    return validate(arcs)


@st.composite
def presentations(draw, min_n=3, max_n=7):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_presentation(n, random.Random(seed))


@pytest.fixture
def trefoil():
    return validate(TREFOIL)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
