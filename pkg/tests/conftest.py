import math
from pathlib import Path

import numpy as np
import pytest

from molpsens.cone import ObjectiveBundle
from molpsens.polytope import HalfPlane, Polygon, enumerate_vertices
from molpsens.problem import ProblemFile

DATA = Path(__file__).resolve().parent.parent / "data"
FIXTURES = Path(__file__).resolve().parent / "fixtures"

EX5_VERTICES = [(4, 1), (6, 3), (7, 5), (6, 7), (4, 8), (2, 8), (0, 6), (0, 4), (1, 2)]
EX5_GRADIENTS = [(4 / 3, -1), (4 / 3, -2), (5 / 4, -3 / 4), (6, 0), (1, -2), (1, 4)]


def rad(d):
    return math.radians(d)


def brute_argmax(vertices, d):
    """Independent vertex scan: 1-based indices of every maximizer within 1e-9."""
    V = np.asarray(vertices, dtype=float)
    vals = V @ np.asarray(d, dtype=float)
    best = vals.max()
    return tuple(int(i) + 1 for i in np.flatnonzero(vals >= best - 1e-9 * (1 + abs(best))))


@pytest.fixture(scope="session")
def ex5_problem():
    return ProblemFile.load(DATA / "example5.molp")


@pytest.fixture(scope="session")
def ex5(ex5_problem):
    return ex5_problem.polygon()


@pytest.fixture(scope="session")
def ex5_bundle(ex5_problem):
    return ex5_problem.bundle()


@pytest.fixture(scope="session")
def square():
    return enumerate_vertices([HalfPlane(1, 0, 1), HalfPlane(0, 1, 1)], True)


@pytest.fixture(scope="session")
def triangle():
    return enumerate_vertices([HalfPlane(1, 1, 1)], True)


def bundle(*grads):
    return ObjectiveBundle(tuple(grads))


# one summary line per acceptance criterion, filled in as the tests report

_criteria: dict[str, tuple[int, str]] = {}
_outcomes: dict[int, list] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("acceptance")
        if mark is not None:
            _criteria[item.nodeid] = (mark.kwargs["criterion"], mark.kwargs["title"])


def pytest_runtest_logreport(report):
    if report.nodeid not in _criteria:
        return
    if report.when == "call" or report.failed:
        n, title = _criteria[report.nodeid]
        notes = [v for k, v in report.user_properties if k == "note"]
        _outcomes[n] = [title, report.passed, notes]


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_outcomes):
        title, ok, notes = _outcomes[n]
        line = f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {title}"
        if notes:
            line += "  [" + "; ".join(notes) + "]"
        terminalreporter.write_line(line)


@pytest.fixture
def note(record_property):
    """Attach a measurement to the acceptance summary line."""
    return lambda text: record_property("note", text)
