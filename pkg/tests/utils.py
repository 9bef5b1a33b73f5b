import itertools
import random
from collections.abc import Iterator

from matchgap.characterize import v1_set
from matchgap.generators import random_gnp
from matchgap.graph import build_graph, is_connected
from matchgap.models import Edge, Graph, Matching


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, itertools.combinations(range(n), 2))


def disjoint_union(*graphs: Graph) -> Graph:
    offset = 0
    edges = []
    for graph in graphs:
        edges += [(u + offset, v + offset) for u, v in graph.edges]
        offset += graph.n
    return build_graph(offset, edges)


def relabel(graph: Graph, permutation: list[int]) -> Graph:
    return build_graph(graph.n, [(permutation[u], permutation[v]) for u, v in graph.edges])


def with_pendant_pair(graph: Graph, anchor: int = 0) -> Graph:
    n = graph.n
    return build_graph(n + 2, list(graph.edges) + [(anchor, n), (anchor, n + 1)])


def labeled_graphs(n: int) -> Iterator[Graph]:
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield build_graph(n, [pair for i, pair in enumerate(pairs) if mask >> i & 1])


def connected_labeled_graphs(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        for graph in labeled_graphs(n):
            if is_connected(graph):
                yield graph


def random_connected_graphs(count: int, n_range: range, seed: int) -> list[Graph]:
    rng = random.Random(seed)
    graphs = []
    while len(graphs) < count:
        n = rng.choice(n_range)
        graph = random_gnp(n, rng.uniform(0.25, 0.6), rng.getrandbits(63))
        if is_connected(graph):
            graphs.append(graph)
    return graphs


def all_matchings(graph: Graph) -> Iterator[tuple[Edge, ...]]:
    def walk(start: int, covered: frozenset, chosen: tuple) -> Iterator[tuple]:
        yield chosen
        for i in range(start, graph.m):
            u, v = graph.edges[i]
            if u not in covered and v not in covered:
                yield from walk(i + 1, covered | {u, v}, chosen + ((u, v),))

    yield from walk(0, frozenset(), ())


def brute_nu(graph: Graph) -> int:
    return max(len(matching) for matching in all_matchings(graph))


def brute_gap(graph: Graph) -> tuple[int, int, int]:
    """(nu, L, l) straight from the definitions."""
    nu = brute_nu(graph)
    residuals = []
    for matching in all_matchings(graph):
        if len(matching) == nu:
            removed = set(matching)
            rest = build_graph(graph.n, [e for e in graph.edges if e not in removed])
            residuals.append(brute_nu(rest))
    return nu, max(residuals), min(residuals)


def random_matching(graph: Graph, rng: random.Random) -> Matching:
    edges = list(graph.edges)
    rng.shuffle(edges)
    covered = set()
    chosen = []
    for u, v in edges:
        if u not in covered and v not in covered and rng.random() < 0.6:
            covered |= {u, v}
            chosen.append((u, v))
    return Matching(edges=tuple(sorted(chosen)))


def brute_two_path_packing(graph: Graph, X: list[int], Y: list[int]) -> bool:
    """Give every x two private Y neighbours, trying all assignments."""
    ys = set(Y)

    def place(i: int, used: frozenset) -> bool:
        if i == len(X):
            return True
        options = [y for y in graph.adjacency[X[i]] if y in ys and y not in used]
        return any(
            place(i + 1, used | {a, b}) for a, b in itertools.combinations(options, 2)
        )

    return place(0, frozenset())


def brute_two_factors(graph: Graph) -> list[tuple[Edge, ...]]:
    found = []
    for edges in itertools.combinations(graph.edges, graph.n):
        degree = [0] * graph.n
        for u, v in edges:
            degree[u] += 1
            degree[v] += 1
        if all(d == 2 for d in degree):
            found.append(edges)
    return found


def is_proper_coloring(graph: Graph, colors: list[tuple[Edge, int]]) -> bool:
    seen = set()
    for (u, v), c in colors:
        if (u, c) in seen or (v, c) in seen:
            return False
        seen |= {(u, c), (v, c)}
    return sorted(e for e, _ in colors) == list(graph.edges)


def brute_conditions(graph: Graph) -> bool:
    """Try every proper 2-colouring of G minus V1 against the three conditions."""
    if graph.n <= 2:
        return True
    v1 = set(v1_set(graph).v1)
    rest = [v for v in range(graph.n) if v not in v1]
    for mask in range(1 << len(rest)):
        xs = {v for i, v in enumerate(rest) if mask >> i & 1}
        X = sorted(xs)
        Y = [v for v in rest if v not in xs]
        if any(u not in v1 and v not in v1 and (u in xs) == (v in xs) for u, v in graph.edges):
            continue
        if len(Y) != len(v1):
            continue
        if any(sum(1 for w in graph.adjacency[y] if w in v1) != 1 for y in Y):
            continue
        if brute_two_path_packing(graph, X, Y):
            return True
    return False
