import collections
import logging
from collections.abc import Iterable, Iterator, Sequence

from matchgap.constants import DEFAULT_ORACLE_LIMIT, DEFAULT_PRUNE_DEPTH
from matchgap.exceptions import GraphInputError, SizeGuardError
from matchgap.graph import canonical_edge
from matchgap.models import AugmentingPath, Edge, Graph, Matching

logger = logging.getLogger(__name__)

UNMATCHED = -1


class _BlossomSearch:
    """Alternating-forest search with blossom contraction (Edmonds).

    ``mate`` is updated in place by :meth:`augment`; :meth:`search` grows a
    forest from one exposed root and returns the exposed vertex it reached.
    """

    def __init__(self, adjacency: Sequence[Sequence[int]], mate: list[int]):
        self.adjacency = adjacency
        self.n = len(adjacency)
        self.mate = mate
        self.parent = [UNMATCHED] * self.n
        self.base = list(range(self.n))
        self.used = [False] * self.n
        self.in_blossom = [False] * self.n

    def _lowest_common_base(self, a: int, b: int) -> int:
        seen = [False] * self.n
        while True:
            a = self.base[a]
            seen[a] = True
            if self.mate[a] == UNMATCHED:
                break
            a = self.parent[self.mate[a]]
        while True:
            b = self.base[b]
            if seen[b]:
                return b
            b = self.parent[self.mate[b]]

    def _mark_path(self, v: int, stem: int, child: int) -> None:
        while self.base[v] != stem:
            self.in_blossom[self.base[v]] = True
            self.in_blossom[self.base[self.mate[v]]] = True
            self.parent[v] = child
            child = self.mate[v]
            v = self.parent[self.mate[v]]

    def search(self, root: int) -> int:
        self.parent = [UNMATCHED] * self.n
        self.base = list(range(self.n))
        self.used = [False] * self.n
        self.used[root] = True
        queue = collections.deque([root])

        while queue:
            v = queue.popleft()
            for to in self.adjacency[v]:
                if self.base[v] == self.base[to] or self.mate[v] == to:
                    continue
                if to == root or (
                    self.mate[to] != UNMATCHED
                    and self.parent[self.mate[to]] != UNMATCHED
                ):
                    stem = self._lowest_common_base(v, to)
                    self.in_blossom = [False] * self.n
                    self._mark_path(v, stem, to)
                    self._mark_path(to, stem, v)
                    for i in range(self.n):
                        if self.in_blossom[self.base[i]]:
                            self.base[i] = stem
                            if not self.used[i]:
                                self.used[i] = True
                                queue.append(i)
                elif self.parent[to] == UNMATCHED:
                    self.parent[to] = v
                    if self.mate[to] == UNMATCHED:
                        return to
                    self.used[self.mate[to]] = True
                    queue.append(self.mate[to])
        return UNMATCHED

    def path_to(self, end: int) -> list[int]:
        path = []
        v = end
        while v != UNMATCHED:
            path.append(v)
            previous = self.parent[v]
            path.append(previous)
            v = self.mate[previous]
        return path[::-1]

    def augment(self, end: int) -> None:
        v = end
        while v != UNMATCHED:
            previous = self.parent[v]
            following = self.mate[previous]
            self.mate[v] = previous
            self.mate[previous] = v
            v = following


def _mate_of(n: int, edges: Iterable[Edge]) -> list[int]:
    mate = [UNMATCHED] * n
    for u, v in edges:
        mate[u] = v
        mate[v] = u
    return mate


def _matching_of(mate: list[int]) -> Matching:
    return Matching(edges=tuple((v, w) for v, w in enumerate(mate) if v < w))


def maximum_mate(adjacency: Sequence[Sequence[int]]) -> list[int]:
    mate = [UNMATCHED] * len(adjacency)
    # greedy start, the search only has to fix the remainder
    for v, row in enumerate(adjacency):
        if mate[v] == UNMATCHED:
            for w in row:
                if mate[w] == UNMATCHED:
                    mate[v] = w
                    mate[w] = v
                    break

    search = _BlossomSearch(adjacency, mate)
    for root in range(len(adjacency)):
        if mate[root] == UNMATCHED:
            end = search.search(root)
            if end != UNMATCHED:
                search.augment(end)
    return mate


def is_matching(graph: Graph, edges: Iterable[Edge]) -> bool:
    covered = set()
    for u, v in edges:
        if not graph.has_edge(u, v) or u in covered or v in covered:
            return False
        covered.update((u, v))
    return True


def make_matching(graph: Graph, edges: Iterable[Edge]) -> Matching:
    edges = sorted({canonical_edge(u, v) for u, v in edges})
    if not is_matching(graph, edges):
        raise GraphInputError(f"{edges} is not a matching of the graph")
    return Matching(edges=tuple(edges))


def find_augmenting_path(graph: Graph, matching: Matching) -> AugmentingPath | None:
    """Return an M-augmenting path, or None when M is maximum (Berge)."""
    search = _BlossomSearch(graph.adjacency, _mate_of(graph.n, matching.edges))
    for root in range(graph.n):
        if matching.covers(root):
            continue
        end = search.search(root)
        if end != UNMATCHED:
            return AugmentingPath(vertices=tuple(search.path_to(end)))
    return None


def augment(matching: Matching, path: AugmentingPath) -> Matching:
    edges = set(matching.edges).symmetric_difference(path.edges)
    return Matching(edges=tuple(sorted(edges)))


def maximum_matching(graph: Graph) -> Matching:
    return _matching_of(maximum_mate(graph.adjacency))


def nu(graph: Graph) -> int:
    return sum(1 for v, w in enumerate(maximum_mate(graph.adjacency)) if v < w)


def nu_of_edges(n: int, edges: Iterable[Edge]) -> int:
    adjacency: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adjacency[u].append(v)
        adjacency[v].append(u)
    return sum(1 for v, w in enumerate(maximum_mate(adjacency)) if v < w)


def residual_nu(graph: Graph, removed: Matching | Iterable[Edge]) -> int:
    """nu(G \\ F) without building the residual Graph."""
    if isinstance(removed, Matching):
        removed = removed.edges
    removed = set(removed)
    return nu_of_edges(graph.n, (e for e in graph.edges if e not in removed))


def _greedy_size(edges: Sequence[Edge], n: int) -> int:
    taken = [False] * n
    size = 0
    for u, v in edges:
        if not taken[u] and not taken[v]:
            taken[u] = taken[v] = True
            size += 1
    return size


def enumerate_maximum_matchings(
    graph: Graph,
    target: int | None = None,
    *,
    limit: int = DEFAULT_ORACLE_LIMIT,
    force: bool = False,
    prune_depth: int = DEFAULT_PRUNE_DEPTH,
) -> Iterator[Matching]:
    """Yield every matching of size nu(G) once, in lexicographic edge order.

    Branches include-before-exclude over the canonical edge list. A branch is
    cut when the chosen edges plus an upper bound on the matching number of
    the still-usable edges cannot reach ``target``: the exact blossom value
    while fewer than ``prune_depth`` edges are chosen, ``min(2 * greedy,
    free // 2)`` afterwards.
    """
    if graph.n > limit and not force:
        raise SizeGuardError(graph.n, limit)
    if target is None:
        target = nu(graph)

    edges = graph.edges
    covered = [False] * graph.n
    chosen: list[Edge] = []

    def upper_bound(start: int) -> int:
        usable = [(u, v) for u, v in edges[start:] if not covered[u] and not covered[v]]
        if len(chosen) < prune_depth:
            return nu_of_edges(graph.n, usable)
        free = len({x for edge in usable for x in edge})
        return min(2 * _greedy_size(usable, graph.n), free // 2)

    found = 0

    def walk(start: int) -> Iterator[Matching]:
        nonlocal found
        if len(chosen) == target:
            found += 1
            yield Matching(edges=tuple(chosen))
            return
        if start == len(edges) or len(chosen) + upper_bound(start) < target:
            return
        u, v = edges[start]
        if not covered[u] and not covered[v]:
            covered[u] = covered[v] = True
            chosen.append((u, v))
            yield from walk(start + 1)
            chosen.pop()
            covered[u] = covered[v] = False
        yield from walk(start + 1)

    yield from walk(0)
    logger.debug("enumerated %d maximum matchings of size %d", found, target)


def alternating_components(first: Matching, second: Matching) -> list[list[Edge]]:
    """Connected components of the symmetric difference, as sorted edge lists."""
    difference = sorted(set(first.edges).symmetric_difference(second.edges))
    incident: dict[int, list[Edge]] = collections.defaultdict(list)
    for edge in difference:
        for v in edge:
            incident[v].append(edge)

    seen: set[Edge] = set()
    components = []
    for start in difference:
        if start in seen:
            continue
        seen.add(start)
        component = [start]
        stack = [start]
        while stack:
            for v in stack.pop():
                for edge in incident[v]:
                    if edge not in seen:
                        seen.add(edge)
                        component.append(edge)
                        stack.append(edge)
        components.append(sorted(component))
    return components
