"""Polynomial decision of L(G) = 2 l(G).

A connected graph G on at least three vertices has L(G) = 2 l(G) exactly when
G minus V1(G) is bipartite with sides (X, Y), |Y| = |V1(G)| with every y in Y
adjacent to exactly one vertex of V1(G), and X is the set of centres of |X|
vertex-disjoint 2-paths of G minus V1(G). Every component is decided on its own;
the property holds for G when it holds for all of them.
"""

import collections
import logging
from collections.abc import Mapping

from matchgap.enums import Condition
from matchgap.exceptions import (
    InvalidChoiceError,
    NotApplicableError,
    NotBipartitionError,
)
from matchgap.graph import (
    bipartition,
    canonical_edge,
    connected_components,
    induced_subgraph,
    triangles,
)
from matchgap.matching import is_matching, maximum_matching, nu, residual_nu
from matchgap.models import (
    CharacterizationCertificate,
    ComponentCertificate,
    Edge,
    ExtremalWitness,
    FlowArc,
    FlowNetwork,
    FlowResult,
    Graph,
    Matching,
    Refutation,
    Triangle,
    TwoPath,
    V1Selection,
)

logger = logging.getLogger(__name__)


def v1_set(graph: Graph, choice: Mapping[Triangle, int] | None = None) -> V1Selection:
    """Degree-one vertices plus one degree-two vertex from each qualifying triangle.

    A triangle qualifies when at least two of its vertices have degree two.
    ``choice`` may pin the picked vertex of some triangles; otherwise the
    smallest degree-two vertex is taken.
    """
    choice = choice or {}
    degree = [len(row) for row in graph.adjacency]
    degree_one = [v for v in range(graph.n) if degree[v] == 1]

    qualifying = []
    chosen = []
    for triangle in triangles(graph):
        candidates = [v for v in triangle if degree[v] == 2]
        if len(candidates) < 2:
            continue
        qualifying.append(triangle)
        picked = choice.get(triangle, candidates[0])
        if picked not in candidates:
            raise InvalidChoiceError(
                f"{picked} is not a degree-two vertex of triangle {triangle}"
            )
        chosen.append((triangle, picked))

    unknown = set(choice) - set(qualifying)
    if unknown:
        raise InvalidChoiceError(f"{sorted(unknown)} are not qualifying triangles")

    return V1Selection(
        degree_one=degree_one,
        qualifying_triangles=qualifying,
        chosen=chosen,
        v1=sorted(degree_one + [v for _, v in chosen]),
    )


def _check_sides(graph: Graph, X: list[int], Y: list[int]) -> None:
    xs, ys = set(X), set(Y)
    if xs & ys or xs | ys != set(range(graph.n)):
        raise NotBipartitionError("X and Y must partition the vertex set")
    for u, v in graph.edges:
        if (u in xs) == (v in xs):
            raise NotBipartitionError(f"edge {(u, v)} lies inside one side")


def build_2path_network(graph: Graph, X: list[int], Y: list[int]) -> FlowNetwork:
    """Source feeds every x with capacity 2, each edge x-y carries 1, each y drains 1.

    Vertices keep their labels; the source is ``n`` and the sink ``n + 1``.
    """
    _check_sides(graph, X, Y)
    source, sink = graph.n, graph.n + 1
    xs = set(X)

    arcs = [FlowArc(tail=source, head=x, capacity=2) for x in sorted(X)]
    for u, v in graph.edges:
        x, y = (u, v) if u in xs else (v, u)
        arcs.append(FlowArc(tail=x, head=y, capacity=1))
    arcs.extend(FlowArc(tail=y, head=sink, capacity=1) for y in sorted(Y))

    return FlowNetwork(
        source=source, sink=sink, nodes=list(range(graph.n + 2)), arcs=arcs
    )


def max_flow(network: FlowNetwork) -> FlowResult:
    """Edmonds-Karp: augment along shortest residual paths."""
    # residual arc 2i runs along arc i, 2i + 1 against it
    heads = []
    residual = []
    outgoing: dict[int, list[int]] = collections.defaultdict(list)
    for i, arc in enumerate(network.arcs):
        heads += [arc.head, arc.tail]
        residual += [arc.capacity, 0]
        outgoing[arc.tail].append(2 * i)
        outgoing[arc.head].append(2 * i + 1)

    value = 0
    while True:
        via = {network.source: None}
        queue = collections.deque([network.source])
        while queue and network.sink not in via:
            v = queue.popleft()
            for r in outgoing[v]:
                if residual[r] > 0 and heads[r] not in via:
                    via[heads[r]] = r
                    queue.append(heads[r])
        if network.sink not in via:
            break

        path = []
        v = network.sink
        while via[v] is not None:
            r = via[v]
            path.append(r)
            v = heads[r ^ 1]
        bottleneck = min(residual[r] for r in path)
        for r in path:
            residual[r] -= bottleneck
            residual[r ^ 1] += bottleneck
        value += bottleneck

    return FlowResult(value=value, flow=[residual[2 * i + 1] for i in range(len(network.arcs))])


def two_path_packing(graph: Graph, X: list[int], Y: list[int]) -> list[TwoPath] | None:
    """|X| vertex-disjoint 2-paths y-x-y' centred on X, or None when none exist."""
    network = build_2path_network(graph, X, Y)
    result = max_flow(network)
    if result.value != 2 * len(X):
        return None

    ends: dict[int, list[int]] = collections.defaultdict(list)
    for arc, amount in zip(network.arcs, result.flow):
        if amount and arc.tail != network.source and arc.head != network.sink:
            ends[arc.tail].append(arc.head)
    packing = []
    for x in sorted(X):
        first, second = sorted(ends[x])
        packing.append((first, x, second))
    return packing


class _Orientation:
    """One side assignment of a bipartite piece of G minus V1, in G's labels."""

    def __init__(self, X: list[int], Y: list[int]):
        self.X = X
        self.Y = Y
        self.side_matching = False
        self.packing: list[TwoPath] | None = None


def _orientations(
    graph: Graph,
    piece: tuple[list[int], list[int]],
    v1: set[int],
    back: dict[int, int],
) -> list[_Orientation]:
    A, B = piece
    subgraph, local = induced_subgraph(graph, [back[v] for v in A + B])
    orientations = []
    for X, Y in ((A, B), (B, A)):
        orientation = _Orientation(sorted(back[x] for x in X), sorted(back[y] for y in Y))
        orientation.side_matching = all(
            sum(1 for w in graph.adjacency[y] if w in v1) == 1 for y in orientation.Y
        )
        if orientation.side_matching:
            packing = two_path_packing(
                subgraph,
                [local[x] for x in orientation.X],
                [local[y] for y in orientation.Y],
            )
            if packing is not None:
                inverse = {new: old for old, new in local.items()}
                orientation.packing = [
                    (inverse[a], inverse[b], inverse[c]) for a, b, c in packing
                ]
        orientations.append(orientation)
    return orientations


def _choose(pieces: list[list[_Orientation]], target: int) -> list[_Orientation] | None:
    """One orientation per piece with |Y| summing to target, first found wins."""
    reached: list[dict[int, tuple[int, _Orientation] | None]] = [{0: None}]
    for options in pieces:
        step: dict[int, tuple[int, _Orientation] | None] = {}
        for total in sorted(reached[-1]):
            for orientation in options:
                step.setdefault(total + len(orientation.Y), (total, orientation))
        reached.append(step)

    if target not in reached[-1]:
        return None
    picked = []
    total = target
    for step in reversed(reached[1:]):
        total, orientation = step[total]
        picked.append(orientation)
    return picked[::-1]


def _decide_component(
    graph: Graph, component: list[int], v1: set[int], index: int
) -> ComponentCertificate:
    if len(component) <= 2:
        return ComponentCertificate(vertices=component, verdict=True)

    component_v1 = [v for v in component if v in v1]
    rest, relabel = induced_subgraph(graph, [v for v in component if v not in v1])
    back = {new: old for old, new in relabel.items()}

    def refuted(condition: Condition, detail: str, witness: list[int]):
        logger.debug("component %d fails condition %d: %s", index, condition, detail)
        return ComponentCertificate(
            vertices=component,
            verdict=False,
            v1=component_v1,
            refutation=Refutation(
                condition=condition, component=index, detail=detail, witness=witness
            ),
        )

    sides = bipartition(rest)
    if not sides.is_bipartite:
        return refuted(
            Condition.BIPARTITE,
            "G minus V1 contains an odd cycle",
            [back[v] for v in sides.odd_cycle],
        )

    pieces = [_orientations(graph, piece, v1, back) for piece in sides.parts]
    target = len(component_v1)

    side_matching = [[o for o in piece if o.side_matching] for piece in pieces]
    for options, piece in zip(side_matching, sides.parts):
        if not options:
            return refuted(
                Condition.SIDE_MATCHING,
                "either side of this piece has a vertex without exactly one "
                "neighbour in V1",
                sorted(back[v] for v in piece[0] + piece[1]),
            )
    if _choose(side_matching, target) is None:
        return refuted(
            Condition.SIDE_MATCHING,
            f"no side assignment gives |Y| = |V1| = {target}",
            component_v1,
        )

    packable = [[o for o in options if o.packing is not None] for options in side_matching]
    picked = _choose(packable, target) if all(packable) else None
    if picked is None:
        stuck = sorted(
            back[v]
            for options, piece in zip(packable, sides.parts)
            if not options
            for v in piece[0] + piece[1]
        )
        return refuted(
            Condition.PATH_PACKING,
            "no admissible side assignment has |X| vertex-disjoint 2-paths",
            stuck or sorted(back.values()),
        )

    return ComponentCertificate(
        vertices=component,
        verdict=True,
        v1=component_v1,
        X=sorted(x for o in picked for x in o.X),
        Y=sorted(y for o in picked for y in o.Y),
        packing=sorted((path for o in picked for path in o.packing), key=lambda p: p[1]),
    )


def check_L_eq_2l(
    graph: Graph, choice: Mapping[Triangle, int] | None = None
) -> CharacterizationCertificate:
    selection = v1_set(graph, choice)
    v1 = set(selection.v1)
    certificates = [
        _decide_component(graph, component, v1, index)
        for index, component in enumerate(connected_components(graph))
    ]

    verdict = all(c.verdict for c in certificates)
    refutation = next((c.refutation for c in certificates if not c.verdict), None)
    return CharacterizationCertificate(
        verdict=verdict,
        selection=selection,
        X=sorted(x for c in certificates for x in c.X) if verdict else [],
        Y=sorted(y for c in certificates for y in c.Y) if verdict else [],
        packing=(
            sorted((p for c in certificates for p in c.packing or ()), key=lambda p: p[1])
            if verdict
            else None
        ),
        components=certificates,
        refutation=refutation,
    )


def extremal_witnesses(
    graph: Graph, certificate: CharacterizationCertificate | None = None
) -> ExtremalWitness:
    """Maximum matchings F, F' with nu(G \\ F) <= |X| and nu(G \\ F') >= 2|X|.

    F pairs every y in Y with its neighbour in V1. Each packed 2-path y-x-y'
    with y' matched to a' extends to the path a-y-x-y'-a', and F' trades
    y'a' for xy'. Small components contribute a maximum matching to both.
    """
    if certificate is None:
        certificate = check_L_eq_2l(graph)
    if not certificate.verdict:
        raise NotApplicableError("the graph does not satisfy L = 2l conditions")

    v1 = set(certificate.selection.v1)
    F: set[Edge] = set()
    shifted: set[Edge] = set()
    for component in certificate.components:
        if len(component.vertices) <= 2:
            small, relabel = induced_subgraph(graph, component.vertices)
            back = {new: old for old, new in relabel.items()}
            edges = {canonical_edge(back[u], back[v]) for u, v in maximum_matching(small).edges}
            F |= edges
            shifted |= edges
            continue

        partner = {y: next(w for w in graph.adjacency[y] if w in v1) for y in component.Y}
        own = {canonical_edge(y, a) for y, a in partner.items()}
        traded = set(own)
        for _, x, y_prime in component.packing:
            traded.discard(canonical_edge(y_prime, partner[y_prime]))
            traded.add(canonical_edge(x, y_prime))
        F |= own
        shifted |= traded

    target = nu(graph)
    size = len(certificate.X)
    without_F = residual_nu(graph, F)
    without_F_prime = residual_nu(graph, shifted)
    is_maximum = (
        len(F) == target
        and len(shifted) == target
        and is_matching(graph, F)
        and is_matching(graph, shifted)
    )
    return ExtremalWitness(
        F=Matching(edges=tuple(sorted(F))),
        F_prime=Matching(edges=tuple(sorted(shifted))),
        nu=target,
        nu_without_F=without_F,
        nu_without_F_prime=without_F_prime,
        is_maximum=is_maximum,
        confirms=is_maximum and without_F <= size and without_F_prime >= 2 * size,
    )
