import random

import pytest

from copermanent.enumeration import generate_graph6
from copermanent.graphs import Graph
from copermanent.survey import survey_order


@pytest.fixture(scope="session")
def universe():
    """Canonical graph6 strings per order, generated once per session."""
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = generate_graph6(n)
        return cache[n]

    return get


@pytest.fixture(scope="session")
def report8():
    return survey_order(8)


def random_graph(n, rng, p=0.5):
    return Graph.from_edges(
        n, [(i, j) for j in range(n) for i in range(j) if rng.random() < p]
    )


@pytest.fixture
def rng():
    return random.Random(20261018)


ACCEPTANCE_RESULTS = []


def pytest_runtest_makereport(item, call):
    if call.when == "call" and "criterion" in item.keywords:
        mark = item.get_closest_marker("criterion")
        ACCEPTANCE_RESULTS.append(
            (mark.args[0], mark.args[1], call.excinfo is None, call.duration)
        )


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key, title, ok, seconds in sorted(ACCEPTANCE_RESULTS):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{status}] {key}: {title} ({seconds:.1f}s)")
