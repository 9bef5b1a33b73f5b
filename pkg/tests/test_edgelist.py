import pytest

from matchgap.edgelist import parse_edgelist, read_document, write_edgelist
from matchgap.exceptions import (
    DuplicateEdgeError,
    EdgeListSyntaxError,
    HeaderMismatchError,
    IndexOutOfRangeError,
    SelfLoopError,
)
from matchgap.generators import random_gnp
from matchgap.graph import build_graph
from tests.conftest import petersen_graph
from tests.utils import path_graph

P5 = b"c path on five vertices\np edge 5 4\ne 1 2\ne 2 3\ne 3 4\ne 4 5\n"


def test_parse_k2():
    graph = parse_edgelist(b"p edge 2 1\ne 1 2\n")
    assert graph == build_graph(2, [(0, 1)])


def test_parse_p5():
    assert parse_edgelist(P5) == path_graph(5)
    assert parse_edgelist(P5.decode()) == path_graph(5)


def test_read_document_keeps_comments():
    document = read_document(P5)
    assert document.comments == ["path on five vertices"]
    assert (document.n, document.m) == (5, 4)
    assert document.edges[0] == (0, 1)


def test_parse_tolerates_blank_lines_and_reversed_edges():
    graph = parse_edgelist("\n  p edge 3 2\n\ne 2 1\n  e 3 2\n\n")
    assert graph.edges == ((0, 1), (1, 2))


def test_parse_isolated_vertices():
    graph = parse_edgelist("p edge 4 0\n")
    assert (graph.n, graph.m) == (4, 0)


@pytest.mark.parametrize(
    "text, line",
    [
        ("e 1 2\n", 1),
        ("p edge 2 1\ne 1\n", 2),
        ("p edge 2 1\ne 1 x\n", 2),
        ("c ok\np edge 2\n", 2),
        ("p graph 2 1\ne 1 2\n", 1),
        ("p edge 2 1\np edge 2 1\ne 1 2\n", 2),
        ("p edge 2 1\nq 1 2\n", 2),
        ("c nothing here\n", 1),
        ("p edge -1 0\n", 1),
    ],
)
def test_parse_syntax_errors(text: str, line: int):
    with pytest.raises(EdgeListSyntaxError) as e:
        parse_edgelist(text)
    assert e.value.line == line
    assert str(e.value).startswith(f"line {line}:")


def test_parse_rejects_non_utf8():
    with pytest.raises(EdgeListSyntaxError):
        parse_edgelist(b"p edge 2 1\ne 1 2 \xff\n")


@pytest.mark.parametrize(
    "text, error, fragment",
    [
        ("p edge 3 2\ne 1 2\ne 2 1\n", DuplicateEdgeError, "line 3"),
        ("p edge 3 1\ne 2 2\n", SelfLoopError, "line 2"),
        ("p edge 3 1\ne 1 4\n", IndexOutOfRangeError, "line 2"),
        ("p edge 3 1\ne 0 1\n", IndexOutOfRangeError, "line 2"),
        ("p edge 3 2\ne 1 2\n", HeaderMismatchError, "announces 2"),
    ],
)
def test_parse_rejects_bad_graphs(text: str, error: type, fragment: str):
    with pytest.raises(error, match=fragment):
        parse_edgelist(text)


def test_write_edgelist():
    assert write_edgelist(build_graph(2, [(0, 1)])) == b"p edge 2 1\ne 1 2\n"
    assert write_edgelist(build_graph(3, []), ["empty"]) == b"c empty\np edge 3 0\n"


def test_write_then_parse_petersen():
    graph = petersen_graph()
    assert parse_edgelist(write_edgelist(graph, ["petersen"])) == graph


def test_write_then_parse_random_graphs():
    for seed in range(20):
        graph = random_gnp(9, 0.4, seed=seed)
        assert parse_edgelist(write_edgelist(graph)) == graph
