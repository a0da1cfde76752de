import pytest
from hypothesis import HealthCheck, settings, strategies as st

from legaug.front import PlatDiagram, component_count, validate

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
settings.load_profile("default")

TREFOIL = PlatDiagram(2, (2, 2, 2))
UNKNOT = PlatDiagram(1, ())
STAB = PlatDiagram(2, (1, 2))
TWO_HUMP = PlatDiagram(2, (2,))


@pytest.fixture
def trefoil():
    return validate(TREFOIL)


@pytest.fixture
def unknot():
    return validate(UNKNOT)


@pytest.fixture
def stab():
    return validate(STAB)


@st.composite
def plats(draw, max_cusps=4, max_crossings=8):
    c = draw(st.integers(1, max_cusps))
    word = draw(st.lists(st.integers(1, 2 * c - 1), max_size=max_crossings))
    return PlatDiagram(c, tuple(word))


def knots(max_cusps=4, max_crossings=8):
    return plats(max_cusps, max_crossings).filter(lambda d: component_count(d) == 1)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import REPORT
    except ImportError:
        return
    if REPORT:
        terminalreporter.section("acceptance criteria")
        for line in REPORT:
            terminalreporter.write_line(line)
