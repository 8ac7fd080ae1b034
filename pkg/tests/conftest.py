import random

import pytest

from bergecover import generators as G
from bergecover.graphcore import Multigraph


def bridged_cubic() -> Multigraph:
    """Two copies of K4 with one edge subdivided, the subdivision vertices joined."""
    def gadget(o):
        # K4 on o..o+3 with edge (o, o+1) replaced by the path o, o+4, o+1
        return [(o, o + 4), (o + 4, o + 1), (o, o + 2), (o, o + 3),
                (o + 1, o + 2), (o + 1, o + 3), (o + 2, o + 3)]
    return Multigraph.from_edges(10, gadget(0) + gadget(5) + [(4, 9)])


@pytest.fixture
def petersen():
    return G.petersen()


@pytest.fixture
def rng():
    return random.Random(1234)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
