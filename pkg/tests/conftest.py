import sys

import pytest

from nucleus_topology.graph import parse_inline

from nucleus_topology.corpus import complete_graph, cycle_graph, path_graph, star_graph


@pytest.fixture
def p3():
    return path_graph(3)


@pytest.fixture
def c3():
    # e1={0,1}, e2={0,2}, e3={1,2}
    return parse_inline("0-1,0-2,1-2")


@pytest.fixture
def c4():
    # e1={0,1}, e2={1,2}, e3={2,3}, e4={0,3}
    return cycle_graph(4)


@pytest.fixture
def k13():
    return star_graph(3)


@pytest.fixture
def k4():
    return complete_graph(4)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[number])
