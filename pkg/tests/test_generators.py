import pytest

from matchgap.exceptions import GiveUpError, InvalidParameterError
from matchgap.generators import random_cubic_bridgeless, random_gnp
from matchgap.graph import is_bridgeless, is_connected, is_cubic, triangles
from tests.utils import complete_graph


def test_gnp_extremes():
    assert random_gnp(5, 0.0, seed=1).m == 0
    full = random_gnp(5, 1.0, seed=1)
    assert full == complete_graph(5)
    assert full.m == 10
    assert random_gnp(0, 0.5, seed=1).n == 0


def test_gnp_is_deterministic():
    assert random_gnp(12, 0.4, seed=7) == random_gnp(12, 0.4, seed=7)
    samples = {random_gnp(12, 0.4, seed=seed).edges for seed in range(5)}
    assert len(samples) > 1


@pytest.mark.parametrize("n, p", [(-1, 0.5), (4, -0.1), (4, 1.5)])
def test_gnp_rejects(n: int, p: float):
    with pytest.raises(InvalidParameterError):
        random_gnp(n, p, seed=0)


def test_cubic_on_four_vertices():
    assert random_cubic_bridgeless(4, seed=3) == complete_graph(4)


@pytest.mark.parametrize("n", [6, 10, 16])
def test_cubic_bridgeless(n: int):
    graph = random_cubic_bridgeless(n, seed=5)
    assert graph.n == n
    assert is_cubic(graph) and is_connected(graph) and is_bridgeless(graph)
    assert graph == random_cubic_bridgeless(n, seed=5)


def test_cubic_on_six_vertices_is_k33_or_prism():
    for seed in range(5):
        assert len(triangles(random_cubic_bridgeless(6, seed=seed))) in (0, 2)


@pytest.mark.parametrize("n", [3, 5, 2, 0])
def test_cubic_rejects(n: int):
    with pytest.raises(InvalidParameterError):
        random_cubic_bridgeless(n, seed=0)


def test_cubic_gives_up(mocker):
    pairing = mocker.patch("matchgap.generators._pairing", return_value=None)
    with pytest.raises(GiveUpError):
        random_cubic_bridgeless(8, seed=0, rejection_limit=5)
    assert pairing.call_count == 5
