import collections
import itertools
from collections.abc import Iterable

from matchgap.exceptions import (
    IndexOutOfRangeError,
    SelfLoopError,
    UnknownEdgeError,
)
from matchgap.models import Bipartition, Edge, Graph, Triangle


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise IndexOutOfRangeError(f"vertex count must be non-negative, got {n}")

    canonical = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRangeError(f"edge {(u, v)} has an endpoint outside 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        canonical.add(canonical_edge(u, v))

    return Graph(n=n, edges=tuple(sorted(canonical)))


def _check_vertex(graph: Graph, v: int) -> None:
    if not 0 <= v < graph.n:
        raise IndexOutOfRangeError(f"vertex {v} is outside 0..{graph.n - 1}")


def degree(graph: Graph, v: int) -> int:
    _check_vertex(graph, v)
    return len(graph.adjacency[v])


def delete_vertices(graph: Graph, removed: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on the surviving vertices.

    Survivors are relabeled compactly in increasing order; the returned map
    sends old labels to new ones.
    """
    removed = set(removed)
    for v in removed:
        _check_vertex(graph, v)

    relabel = {}
    for v in range(graph.n):
        if v not in removed:
            relabel[v] = len(relabel)

    edges = tuple(
        (relabel[u], relabel[v])
        for u, v in graph.edges
        if u in relabel and v in relabel
    )
    return Graph(n=len(relabel), edges=edges), relabel


def delete_edges(graph: Graph, removed: Iterable[Edge]) -> Graph:
    removed = {canonical_edge(u, v) for u, v in removed}
    unknown = removed - graph.edge_set
    if unknown:
        raise UnknownEdgeError(f"edges {sorted(unknown)} are not in the graph")
    return Graph(n=graph.n, edges=tuple(e for e in graph.edges if e not in removed))


def connected_components(graph: Graph) -> list[list[int]]:
    seen = [False] * graph.n
    components = []
    for root in range(graph.n):
        if seen[root]:
            continue
        seen[root] = True
        component = [root]
        queue = collections.deque([root])
        while queue:
            v = queue.popleft()
            for w in graph.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    component.append(w)
                    queue.append(w)
        components.append(sorted(component))
    return components


def _tree_path(parent: list[int], v: int) -> list[int]:
    path = [v]
    while parent[v] != -1:
        v = parent[v]
        path.append(v)
    return path


def bipartition(graph: Graph) -> Bipartition:
    """Two-colour every component by BFS from its smallest vertex.

    When some component has an odd cycle the result carries no parts and one
    odd cycle, closed by the first monochromatic edge found.
    """
    colour = [-1] * graph.n
    parent = [-1] * graph.n
    parts = []
    for root in range(graph.n):
        if colour[root] != -1:
            continue
        colour[root] = 0
        sides: tuple[list[int], list[int]] = ([root], [])
        queue = collections.deque([root])
        while queue:
            v = queue.popleft()
            for w in graph.adjacency[v]:
                if colour[w] == -1:
                    colour[w] = 1 - colour[v]
                    parent[w] = v
                    sides[colour[w]].append(w)
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return Bipartition(odd_cycle=_odd_cycle(parent, v, w))
        parts.append((sorted(sides[0]), sorted(sides[1])))
    return Bipartition(parts=parts)


def _odd_cycle(parent: list[int], v: int, w: int) -> list[int]:
    up_v = _tree_path(parent, v)
    up_w = _tree_path(parent, w)
    ancestors_w = set(up_w)
    apex = next(x for x in up_v if x in ancestors_w)
    left = up_v[: up_v.index(apex) + 1]
    right = up_w[: up_w.index(apex)]
    return left + right[::-1]


def triangles(graph: Graph) -> list[Triangle]:
    found = []
    for u in range(graph.n):
        later = [v for v in graph.adjacency[u] if v > u]
        for v, w in itertools.combinations(later, 2):
            if graph.has_edge(v, w):
                found.append((u, v, w))
    return found


def bridges(graph: Graph) -> list[Edge]:
    """Cut edges by iterative DFS low-link."""
    discovered = [-1] * graph.n
    low = [0] * graph.n
    timer = 0
    found = []
    for root in range(graph.n):
        if discovered[root] != -1:
            continue
        discovered[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(graph.adjacency[root]))]
        while stack:
            v, parent, neighbours = stack[-1]
            descended = False
            for w in neighbours:
                if w == parent:
                    continue
                if discovered[w] == -1:
                    discovered[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(graph.adjacency[w])))
                    descended = True
                    break
                low[v] = min(low[v], discovered[w])
            if descended:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[v])
                if low[v] > discovered[parent]:
                    found.append(canonical_edge(parent, v))
    return sorted(found)


def is_bridgeless(graph: Graph) -> bool:
    return not bridges(graph)


def is_connected(graph: Graph) -> bool:
    return len(connected_components(graph)) <= 1


def is_cubic(graph: Graph) -> bool:
    return all(len(row) == 3 for row in graph.adjacency)


def induced_subgraph(graph: Graph, kept: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    kept = set(kept)
    return delete_vertices(graph, (v for v in range(graph.n) if v not in kept))
