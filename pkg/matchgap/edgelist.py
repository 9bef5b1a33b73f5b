"""DIMACS-style edge lists: ``c`` comments, one ``p edge n m`` header, ``e u v`` records."""

from matchgap.exceptions import (
    DuplicateEdgeError,
    EdgeListSyntaxError,
    HeaderMismatchError,
    IndexOutOfRangeError,
    SelfLoopError,
)
from matchgap.graph import build_graph, canonical_edge
from matchgap.models import EdgeListDocument, Graph


def _integers(fields: list[str], count: int, line: int) -> list[int]:
    if len(fields) != count:
        raise EdgeListSyntaxError(f"expected {count} integers, got {len(fields)}", line)
    try:
        return [int(field) for field in fields]
    except ValueError:
        raise EdgeListSyntaxError(f"not an integer in {' '.join(fields)!r}", line) from None


def read_document(text: bytes | str) -> EdgeListDocument:
    """Parse without building the graph; endpoints become 0-based."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise EdgeListSyntaxError(f"not UTF-8: {e.reason}", 1) from None

    header = None
    comments = []
    edges = []
    seen = set()
    for number, raw in enumerate(text.splitlines(), start=1):
        fields = raw.split()
        if not fields:
            continue

        match fields[0]:
            case "c":
                comments.append(raw.strip()[1:].strip())
            case "p":
                if header is not None:
                    raise EdgeListSyntaxError("second problem line", number)
                if len(fields) < 2 or fields[1] != "edge":
                    raise EdgeListSyntaxError("problem line must read 'p edge n m'", number)
                n, m = _integers(fields[2:], 2, number)
                if n < 0 or m < 0:
                    raise EdgeListSyntaxError("negative size in problem line", number)
                header = (n, m)
            case "e":
                if header is None:
                    raise EdgeListSyntaxError("edge before the problem line", number)
                u, v = _integers(fields[1:], 2, number)
                if not (1 <= u <= header[0] and 1 <= v <= header[0]):
                    raise IndexOutOfRangeError(
                        f"line {number}: endpoint outside 1..{header[0]}"
                    )
                if u == v:
                    raise SelfLoopError(f"line {number}: self-loop at vertex {u}")
                edge = canonical_edge(u - 1, v - 1)
                if edge in seen:
                    raise DuplicateEdgeError(f"line {number}: edge {u} {v} repeated")
                seen.add(edge)
                edges.append(edge)
            case _:
                raise EdgeListSyntaxError(f"unknown record {fields[0]!r}", number)

    if header is None:
        raise EdgeListSyntaxError("missing problem line", 1)
    n, m = header
    if m != len(edges):
        raise HeaderMismatchError(f"header announces {m} edges, found {len(edges)}")
    return EdgeListDocument(n=n, m=m, edges=edges, comments=comments)


def parse_edgelist(text: bytes | str) -> Graph:
    document = read_document(text)
    return build_graph(document.n, document.edges)


def write_edgelist(graph: Graph, comments: list[str] | None = None) -> bytes:
    lines = [f"c {comment}" for comment in comments or ()]
    lines.append(f"p edge {graph.n} {graph.m}")
    lines += [f"e {u + 1} {v + 1}" for u, v in graph.edges]
    return ("\n".join(lines) + "\n").encode()
