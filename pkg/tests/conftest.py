import math

import numpy as np
import pytest

from rydwire.atoms import PhysicalParams, build_interaction_graph, builtin_layout

TWO_PI = 2 * math.pi

# one line per acceptance criterion, printed in the terminal summary
ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture
def params():
    return PhysicalParams()


@pytest.fixture
def chain3():
    return builtin_layout("chain3", 7.0)


@pytest.fixture
def chain3_graph(chain3, params):
    return build_interaction_graph(chain3, params)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def record():
    def _record(number: int, passed: bool, detail: str) -> None:
        ACCEPTANCE_LINES[number] = f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}"

    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])
