from fractions import Fraction

import pytest

from ndoubling.measure import MeasureSpec

ACCEPTANCE_LINES = []


@pytest.fixture
def spec3():
    return MeasureSpec(3, Fraction(1, 2), Fraction(3, 2))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
