import pytest

from matchgap import MatchGap, OracleSettings
from matchgap.graph import build_graph
from matchgap.models import Graph
from tests.utils import complete_graph, cycle_graph, path_graph


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def k33_graph() -> Graph:
    return build_graph(6, [(a, b) for a in range(3) for b in range(3, 6)])


def prism_graph() -> Graph:
    return build_graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)])


def bridged_cubic_graph() -> Graph:
    """Two K4s with one edge subdivided each, the new vertices joined by a bridge."""
    half = [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4)]
    return build_graph(10, half + [(u + 5, v + 5) for u, v in half] + [(4, 9)])


@pytest.fixture
def api():
    return MatchGap()


@pytest.fixture
def api_forced():
    return MatchGap(OracleSettings(oracle_limit=0, census_limit=0), force=True)


@pytest.fixture
def k2():
    return complete_graph(2)


@pytest.fixture
def p3():
    return path_graph(3)


@pytest.fixture
def p5():
    return path_graph(5)


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def c6():
    return cycle_graph(6)


@pytest.fixture
def paw():
    # triangle 1, 2, 3 with the pendant 0 on 1
    return build_graph(4, [(0, 1), (1, 2), (1, 3), (2, 3)])


@pytest.fixture
def triangle_tail():
    # triangle 0, 1, 2 with the tail 2-3-4
    return build_graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)])


@pytest.fixture
def bull():
    # triangle 0, 1, 2 with the pendants 1-3 and 2-4
    return build_graph(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)])


@pytest.fixture
def spider():
    # three legs of length two around 0
    return build_graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])


@pytest.fixture
def petersen():
    return petersen_graph()


@pytest.fixture
def k33():
    return k33_graph()


@pytest.fixture
def prism():
    return prism_graph()


@pytest.fixture
def bridged_cubic():
    return bridged_cubic_graph()
