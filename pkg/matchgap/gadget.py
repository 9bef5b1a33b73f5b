"""Triangle inflation of cubic graphs and the quantities it ties together.

Replacing every vertex of a bridgeless cubic graph G by a triangle gives a
bridgeless cubic graph G' whose maximum matchings are perfect, whose 2-factors
are the complements of those matchings, and for which

    L(G') = (|V(G')| - w) / 2        l(G') = (|V(G')| - W) / 2

with w and W the fewest and most odd cycles over the 2-factors of G'. G is
3-edge-colourable exactly when 2 L(G') = 3 l(G').
"""

import logging
from collections.abc import Iterator

from matchgap.constants import DEFAULT_CENSUS_LIMIT, DEFAULT_PRUNE_DEPTH, EDGE_COLORS
from matchgap.exceptions import (
    HasBridgeError,
    InvariantViolationError,
    NotCubicError,
    SizeGuardError,
)
from matchgap.graph import bridges, build_graph, connected_components, is_cubic
from matchgap.matching import enumerate_maximum_matchings, nu, residual_nu
from matchgap.models import (
    Edge,
    EdgeColoring3,
    Graph,
    Inflation,
    ReductionReport,
    TwoFactorStats,
)

logger = logging.getLogger(__name__)


def require_cubic(graph: Graph) -> None:
    irregular = [v for v, row in enumerate(graph.adjacency) if len(row) != 3]
    if irregular:
        raise NotCubicError(f"vertices {irregular} do not have degree 3")


def inflate(graph: Graph) -> Inflation:
    """Vertex v becomes the triangle 3v, 3v + 1, 3v + 2.

    The base edge uv leaves u's triangle at port ``3u + i`` where i is the rank
    of v among u's neighbours, so each port carries exactly one base edge.
    """
    require_cubic(graph)
    vertex_map = [(3 * v, 3 * v + 1, 3 * v + 2) for v in range(graph.n)]

    edges = []
    for a, b, c in vertex_map:
        edges += [(a, b), (a, c), (b, c)]
    edge_map = []
    for u, v in graph.edges:
        port_u = 3 * u + graph.adjacency[u].index(v)
        port_v = 3 * v + graph.adjacency[v].index(u)
        edges.append((port_u, port_v))
        edge_map.append(((u, v), (port_u, port_v)))

    return Inflation(
        base=graph,
        inflated=build_graph(3 * graph.n, edges),
        vertex_map=vertex_map,
        edge_map=edge_map,
    )


def enumerate_2_factors(
    graph: Graph,
    *,
    limit: int = DEFAULT_CENSUS_LIMIT,
    force: bool = False,
    prune_depth: int = DEFAULT_PRUNE_DEPTH,
) -> Iterator[tuple[Edge, ...]]:
    """Spanning 2-regular subgraphs of a cubic graph, as sorted edge tuples.

    In a cubic graph these are exactly the complements of perfect matchings,
    yielded in the matchings' lexicographic order.
    """
    require_cubic(graph)
    if graph.n > limit and not force:
        raise SizeGuardError(graph.n, limit)
    if 2 * nu(graph) != graph.n:
        return

    for matching in enumerate_maximum_matchings(
        graph, graph.n // 2, force=True, prune_depth=prune_depth
    ):
        removed = set(matching.edges)
        yield tuple(e for e in graph.edges if e not in removed)


def _odd_cycles(n: int, factor: tuple[Edge, ...]) -> int:
    cycles = connected_components(Graph(n=n, edges=factor))
    return sum(1 for cycle in cycles if len(cycle) % 2)


def odd_cycle_stats(
    graph: Graph,
    *,
    limit: int = DEFAULT_CENSUS_LIMIT,
    force: bool = False,
    prune_depth: int = DEFAULT_PRUNE_DEPTH,
) -> TwoFactorStats:
    stats = TwoFactorStats(count=0)
    for factor in enumerate_2_factors(
        graph, limit=limit, force=force, prune_depth=prune_depth
    ):
        odd = _odd_cycles(graph.n, factor)
        stats.count += 1
        if stats.w is None or odd < stats.w:
            stats.w, stats.w_witness = odd, factor
        if stats.W is None or odd > stats.W:
            stats.W, stats.W_witness = odd, factor

    logger.debug(
        "%d two-factors on %d vertices, odd cycles between %s and %s",
        stats.count, graph.n, stats.w, stats.W,
    )
    return stats


def three_edge_colorable(graph: Graph) -> EdgeColoring3 | None:
    """Proper 3-edge-colouring by backtracking, or None when none exists.

    The next edge is always one with the fewest colours left; the first edge
    is fixed to colour 0.
    """
    require_cubic(graph)
    used: list[set[int]] = [set() for _ in range(graph.n)]
    colors: dict[Edge, int] = {}

    def free(edge: Edge) -> list[int]:
        u, v = edge
        return [c for c in EDGE_COLORS if c not in used[u] and c not in used[v]]

    def search() -> bool:
        if len(colors) == graph.m:
            return True
        edge = min(
            (e for e in graph.edges if e not in colors), key=lambda e: len(free(e))
        )
        options = free(edge) if colors else [EDGE_COLORS[0]]
        u, v = edge
        for c in options:
            colors[edge] = c
            used[u].add(c)
            used[v].add(c)
            if search():
                return True
            used[u].discard(c)
            used[v].discard(c)
            del colors[edge]
        return False

    if not search():
        return None
    return EdgeColoring3(colors=sorted(colors.items()))


def _formula(inflated: Graph, stats: TwoFactorStats) -> tuple[int, int]:
    if 2 * nu(inflated) != inflated.n:
        raise InvariantViolationError("an inflated bridgeless cubic graph must have a perfect matching")
    if stats.count == 0:
        raise InvariantViolationError("a graph with a perfect matching has a 2-factor")
    return (inflated.n - stats.w) // 2, (inflated.n - stats.W) // 2


def inflation_L_l(
    inflation: Inflation,
    *,
    limit: int = DEFAULT_CENSUS_LIMIT,
    force: bool = False,
    prune_depth: int = DEFAULT_PRUNE_DEPTH,
) -> tuple[int, int]:
    """L and l of the inflated graph from its odd-cycle statistics."""
    stats = odd_cycle_stats(
        inflation.inflated, limit=limit, force=force, prune_depth=prune_depth
    )
    return _formula(inflation.inflated, stats)


def reduction_check(
    graph: Graph,
    *,
    limit: int = DEFAULT_CENSUS_LIMIT,
    force: bool = False,
    prune_depth: int = DEFAULT_PRUNE_DEPTH,
) -> ReductionReport:
    require_cubic(graph)
    cut = bridges(graph)
    if cut:
        raise HasBridgeError(f"bridges {cut}")

    colorable = three_edge_colorable(graph) is not None
    inflation = inflate(graph)
    inflated = inflation.inflated
    stats = odd_cycle_stats(inflated, limit=limit, force=force, prune_depth=prune_depth)
    L, l = _formula(inflated, stats)

    ratio_holds = 2 * L == 3 * l
    inflated_colorable = three_edge_colorable(inflated) is not None
    base_edges = [edge for _, edge in inflation.edge_map]
    base_edge_residual_nu = residual_nu(inflated, base_edges)
    third = inflated.n // 3

    consistent = (
        colorable == ratio_holds
        and (stats.w == 0) == inflated_colorable
        and stats.W == third
        and base_edge_residual_nu == third
        and is_cubic(inflated)
    )
    if not consistent:
        logger.error("reduction broken on a %d-vertex cubic graph", graph.n)
    return ReductionReport(
        colorable=colorable,
        inflated_vertices=inflated.n,
        w=stats.w,
        W=stats.W,
        L=L,
        l=l,
        ratio_holds=ratio_holds,
        inflated_colorable=inflated_colorable,
        base_edge_residual_nu=base_edge_residual_nu,
        consistent=consistent,
    )
