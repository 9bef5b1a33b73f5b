import functools
from typing import Any

import pydantic

from matchgap.constants import (
    DEFAULT_CENSUS_LIMIT,
    DEFAULT_ORACLE_LIMIT,
    DEFAULT_PRUNE_DEPTH,
    DEFAULT_REJECTION_LIMIT,
)
from matchgap.enums import Condition

Edge = tuple[int, int]
Triangle = tuple[int, int, int]
TwoPath = tuple[int, int, int]


class Graph(pydantic.BaseModel):
    """Finite simple undirected graph on the vertices ``0..n-1``.

    ``edges`` is kept canonical: every pair is ordered ``u < v`` and the tuple
    is sorted without repeats. Use :func:`matchgap.graph.build_graph` to get
    there from arbitrary input.
    """

    model_config = pydantic.ConfigDict(frozen=True)

    n: int = pydantic.Field(ge=0)
    edges: tuple[Edge, ...] = ()

    @pydantic.model_validator(mode="after")
    def _check_canonical(self) -> "Graph":
        previous = None
        for u, v in self.edges:
            if not 0 <= u < v < self.n:
                raise ValueError(f"edge {(u, v)} is not canonical for n={self.n}")
            if previous is not None and (u, v) <= previous:
                raise ValueError("edges must be sorted and free of duplicates")
            previous = (u, v)
        return self

    @functools.cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        neighbours: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            neighbours[u].append(v)
            neighbours[v].append(u)
        return tuple(tuple(sorted(row)) for row in neighbours)

    @functools.cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edge_set


class Matching(pydantic.BaseModel):
    model_config = pydantic.ConfigDict(frozen=True)

    edges: tuple[Edge, ...] = ()

    @property
    def size(self) -> int:
        return len(self.edges)

    @functools.cached_property
    def covered(self) -> frozenset[int]:
        return frozenset(v for edge in self.edges for v in edge)

    def covers(self, v: int) -> bool:
        return v in self.covered


class AugmentingPath(pydantic.BaseModel):
    """Odd path whose 2nd, 4th, ... edges lie in the matching."""

    model_config = pydantic.ConfigDict(frozen=True)

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(
            (min(u, v), max(u, v)) for u, v in zip(self.vertices, self.vertices[1:])
        )


class Bipartition(pydantic.BaseModel):
    parts: list[tuple[list[int], list[int]]] | None = None
    odd_cycle: list[int] | None = None

    @property
    def is_bipartite(self) -> bool:
        return self.parts is not None


class GapProfile(pydantic.BaseModel):
    nu: int
    L: int
    l: int
    F_L: Matching
    F_l: Matching
    matchings_examined: int


class TightPair(pydantic.BaseModel):
    F: Matching
    F_prime: Matching
    nu_without_F: int
    nu_without_F_prime: int


class PairwiseBoundReport(pydantic.BaseModel):
    pairs_covered: int
    tightest: TightPair
    slack: int


class PerfectMatchingBoundReport(pydantic.BaseModel):
    applicable: bool
    L: int | None = None
    l: int | None = None
    lhs: int | None = None
    rhs: int | None = None
    holds: bool | None = None


class PendantReductionTrace(pydantic.BaseModel):
    removed: list[Triangle]
    residual: Graph
    k: int


class ExtremalStructureReport(pydantic.BaseModel):
    extremal_pairs: int
    residual_matchings: int
    spanning: bool = True
    two_paths: bool = True
    inclusion: bool = True
    residual_maximum: bool = True
    difference_maximum: bool = True
    no_pendant_siblings: bool = True


class PendantRecurrenceReport(pydantic.BaseModel):
    trace: PendantReductionTrace
    residual_L: int
    residual_l: int
    holds: bool


class CheckOutcome(pydantic.BaseModel):
    name: str
    holds: bool
    detail: str | None = None
    report: dict[str, Any] | None = None


class VerificationReport(pydantic.BaseModel):
    profile: GapProfile
    checks: list[CheckOutcome]

    @property
    def all_hold(self) -> bool:
        return all(check.holds for check in self.checks)


class V1Selection(pydantic.BaseModel):
    degree_one: list[int]
    qualifying_triangles: list[Triangle]
    chosen: list[tuple[Triangle, int]]
    v1: list[int]


class Refutation(pydantic.BaseModel):
    condition: Condition
    component: int
    detail: str
    witness: list[int] = []


class ComponentCertificate(pydantic.BaseModel):
    vertices: list[int]
    verdict: bool
    v1: list[int] = []
    X: list[int] = []
    Y: list[int] = []
    packing: list[TwoPath] | None = None
    refutation: Refutation | None = None


class CharacterizationCertificate(pydantic.BaseModel):
    verdict: bool
    selection: V1Selection
    X: list[int] = []
    Y: list[int] = []
    packing: list[TwoPath] | None = None
    components: list[ComponentCertificate]
    refutation: Refutation | None = None


class ExtremalWitness(pydantic.BaseModel):
    F: Matching
    F_prime: Matching
    nu: int
    nu_without_F: int
    nu_without_F_prime: int
    is_maximum: bool
    confirms: bool


class FlowArc(pydantic.BaseModel):
    tail: int
    head: int
    capacity: int = pydantic.Field(ge=0)


class FlowNetwork(pydantic.BaseModel):
    source: int
    sink: int
    nodes: list[int]
    arcs: list[FlowArc]

    @property
    def node_count(self) -> int:
        return len(self.nodes)


class FlowResult(pydantic.BaseModel):
    value: int
    flow: list[int]


class Inflation(pydantic.BaseModel):
    base: Graph
    inflated: Graph
    vertex_map: list[Triangle]
    edge_map: list[tuple[Edge, Edge]]


class TwoFactorStats(pydantic.BaseModel):
    count: int
    w: int | None = None
    W: int | None = None
    w_witness: tuple[Edge, ...] | None = None
    W_witness: tuple[Edge, ...] | None = None


class EdgeColoring3(pydantic.BaseModel):
    colors: list[tuple[Edge, int]]

    def color_of(self, u: int, v: int) -> int:
        edge = (min(u, v), max(u, v))
        return dict(self.colors)[edge]


class ReductionReport(pydantic.BaseModel):
    colorable: bool
    inflated_vertices: int
    w: int
    W: int
    L: int
    l: int
    ratio_holds: bool
    inflated_colorable: bool
    base_edge_residual_nu: int
    consistent: bool


class EdgeListDocument(pydantic.BaseModel):
    n: int = pydantic.Field(ge=0)
    m: int = pydantic.Field(ge=0)
    edges: list[Edge]
    comments: list[str] = []


class CrossCheck(pydantic.BaseModel):
    oracle: GapProfile
    agrees: bool


class OracleSettings(pydantic.BaseModel):
    oracle_limit: int = pydantic.Field(default=DEFAULT_ORACLE_LIMIT, ge=0)
    census_limit: int = pydantic.Field(default=DEFAULT_CENSUS_LIMIT, ge=0)
    prune_depth: int = pydantic.Field(default=DEFAULT_PRUNE_DEPTH, ge=0)
    rejection_limit: int = pydantic.Field(default=DEFAULT_REJECTION_LIMIT, ge=1)


class Report(pydantic.BaseModel):
    command: str
    input_digest: str | None = None
    result: dict[str, Any]
    elapsed_ms: int
    version: str
    seed: int | None = None
