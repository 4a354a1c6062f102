import pytest

from flowtension.families import complete_graph, cycle_graph, path_graph
from flowtension.graph import Graph, parse_edge_list

ACCEPTANCE_LINES = []


@pytest.fixture
def k3():
    return parse_edge_list("1 2\n2 3\n3 1")


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def p3():
    return path_graph(3)


@pytest.fixture
def c3():
    return cycle_graph(3)


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
