"""Exact L(G) and l(G) by enumeration, and the inequalities they satisfy."""

import logging

from matchgap.constants import DEFAULT_ORACLE_LIMIT, DEFAULT_PRUNE_DEPTH
from matchgap.exceptions import InvariantViolationError, NotApplicableError
from matchgap.graph import delete_edges, delete_vertices, is_connected
from matchgap.matching import (
    alternating_components,
    enumerate_maximum_matchings,
    is_matching,
    nu,
    residual_nu,
)
from matchgap.models import (
    CheckOutcome,
    ExtremalStructureReport,
    GapProfile,
    Graph,
    Matching,
    PairwiseBoundReport,
    PendantRecurrenceReport,
    PendantReductionTrace,
    PerfectMatchingBoundReport,
    TightPair,
    Triangle,
    VerificationReport,
)

logger = logging.getLogger(__name__)

Census = list[tuple[Matching, int]]


def matching_census(
    graph: Graph,
    *,
    limit: int = DEFAULT_ORACLE_LIMIT,
    force: bool = False,
    prune_depth: int = DEFAULT_PRUNE_DEPTH,
) -> Census:
    """Every maximum matching F of G with nu(G \\ F), in enumeration order."""
    return [
        (matching, residual_nu(graph, matching))
        for matching in enumerate_maximum_matchings(
            graph, limit=limit, force=force, prune_depth=prune_depth
        )
    ]


def _profile_of(graph: Graph, census: Census) -> GapProfile:
    # first occurrence wins, so the witnesses follow enumeration order
    F_L, L = census[0]
    F_l, l = census[0]
    for matching, value in census[1:]:
        if value > L:
            F_L, L = matching, value
        if value < l:
            F_l, l = matching, value

    profile = GapProfile(
        nu=F_L.size, L=L, l=l, F_L=F_L, F_l=F_l, matchings_examined=len(census)
    )
    if residual_nu(graph, F_L) != L or residual_nu(graph, F_l) != l:
        raise InvariantViolationError("witness matchings do not reproduce L and l")
    if not 0 <= l <= L <= profile.nu:
        raise InvariantViolationError(f"expected 0 <= l <= L <= nu, got {profile}")
    return profile


def gap_profile(
    graph: Graph,
    *,
    limit: int = DEFAULT_ORACLE_LIMIT,
    force: bool = False,
    prune_depth: int = DEFAULT_PRUNE_DEPTH,
) -> GapProfile:
    census = matching_census(graph, limit=limit, force=force, prune_depth=prune_depth)
    profile = _profile_of(graph, census)
    logger.debug(
        "gap profile nu=%d L=%d l=%d over %d matchings",
        profile.nu, profile.L, profile.l, profile.matchings_examined,
    )
    return profile


def check_pairwise_bound(
    graph: Graph,
    *,
    limit: int = DEFAULT_ORACLE_LIMIT,
    force: bool = False,
    prune_depth: int = DEFAULT_PRUNE_DEPTH,
) -> PairwiseBoundReport:
    """nu(G \\ F') <= 2 nu(G \\ F) for every ordered pair of maximum matchings.

    The slack 2 nu(G \\ F) - nu(G \\ F') of every pair is at least the slack of
    the pair (F_l, F_L), so that pair is the tightest and decides the check.
    ``pairs_covered`` counts the ordered pairs it bounds; only the tightest
    one is evaluated.
    """
    census = matching_census(graph, limit=limit, force=force, prune_depth=prune_depth)
    profile = _profile_of(graph, census)
    slack = 2 * profile.l - profile.L
    if slack < 0:
        raise InvariantViolationError(
            f"nu(G \\ F') = {profile.L} exceeds 2 nu(G \\ F) = {2 * profile.l}"
        )
    return PairwiseBoundReport(
        pairs_covered=len(census) ** 2,
        tightest=TightPair(
            F=profile.F_l,
            F_prime=profile.F_L,
            nu_without_F=profile.l,
            nu_without_F_prime=profile.L,
        ),
        slack=slack,
    )


def check_perfect_matching_bound(
    graph: Graph,
    profile: GapProfile | None = None,
    *,
    limit: int = DEFAULT_ORACLE_LIMIT,
    force: bool = False,
    prune_depth: int = DEFAULT_PRUNE_DEPTH,
) -> PerfectMatchingBoundReport:
    if 2 * nu(graph) != graph.n:
        return PerfectMatchingBoundReport(applicable=False)

    if profile is None:
        profile = gap_profile(graph, limit=limit, force=force, prune_depth=prune_depth)
    report = PerfectMatchingBoundReport(
        applicable=True,
        L=profile.L,
        l=profile.l,
        lhs=2 * profile.L,
        rhs=3 * profile.l,
        holds=2 * profile.L <= 3 * profile.l,
    )
    if not report.holds:
        raise InvariantViolationError(f"2L = {report.lhs} exceeds 3l = {report.rhs}")
    return report


def _pendant_triple(graph: Graph) -> Triangle | None:
    """Least (w, u, v) with u < v both of degree one and adjacent to w."""
    for w in range(graph.n):
        leaves = [u for u in graph.adjacency[w] if len(graph.adjacency[u]) == 1]
        if len(leaves) >= 2:
            return w, leaves[0], leaves[1]
    return None


def pendant_reduction(graph: Graph) -> PendantReductionTrace:
    """Strip pendant-sibling triples until none is left.

    Removed triples are reported as ``(u, v, w)`` in the labels of the input
    graph; the residual carries compact labels.
    """
    original = list(range(graph.n))
    removed = []
    current = graph
    while (triple := _pendant_triple(current)) is not None:
        w, u, v = triple
        removed.append((original[u], original[v], original[w]))
        current, relabel = delete_vertices(current, (u, v, w))
        survivors = [0] * current.n
        for old, new in relabel.items():
            survivors[new] = original[old]
        original = survivors

    return PendantReductionTrace(removed=removed, residual=current, k=len(removed))


def pendant_recurrence(
    graph: Graph,
    profile: GapProfile | None = None,
    *,
    limit: int = DEFAULT_ORACLE_LIMIT,
    force: bool = False,
    prune_depth: int = DEFAULT_PRUNE_DEPTH,
) -> PendantRecurrenceReport:
    """Check L and l drop by exactly k after k pendant-sibling removals."""
    options = dict(limit=limit, force=force, prune_depth=prune_depth)
    if profile is None:
        profile = gap_profile(graph, **options)
    trace = pendant_reduction(graph)
    residual = gap_profile(trace.residual, **options)
    holds = (
        profile.L == residual.L + trace.k and profile.l == residual.l + trace.k
    )
    if not holds:
        raise InvariantViolationError(
            f"after {trace.k} removals L, l went from ({profile.L}, {profile.l}) "
            f"to ({residual.L}, {residual.l})"
        )
    return PendantRecurrenceReport(
        trace=trace, residual_L=residual.L, residual_l=residual.l, holds=holds
    )


def _is_two_path(component: list) -> bool:
    if len(component) != 2:
        return False
    (a, b), (c, d) = component
    return len({a, b, c, d}) == 3


def extremal_structure_check(
    graph: Graph,
    *,
    limit: int = DEFAULT_ORACLE_LIMIT,
    force: bool = False,
    prune_depth: int = DEFAULT_PRUNE_DEPTH,
) -> ExtremalStructureReport:
    """Structure forced on every extremal pair when L = 2l.

    For each F_L attaining L, each F_l attaining l and each maximum matching
    H_L of G \\ F_L: F_L and F_l cover V(G), every component of F_L ^ F_l is a
    2-path, F_l - F_L lies in H_L, both H_L - F_l and F_L - F_l are maximum in
    G \\ F_l, and no vertex carries two pendant neighbours.
    """
    if graph.n < 3 or not is_connected(graph):
        raise NotApplicableError("needs a connected graph on at least 3 vertices")

    census = matching_census(graph, limit=limit, force=force, prune_depth=prune_depth)
    profile = _profile_of(graph, census)
    if profile.L != 2 * profile.l:
        raise NotApplicableError(f"L = {profile.L} differs from 2l = {2 * profile.l}")

    report = ExtremalStructureReport(extremal_pairs=0, residual_matchings=0)
    report.no_pendant_siblings = _pendant_triple(graph) is None

    maximisers = [matching for matching, value in census if value == profile.L]
    minimisers = [matching for matching, value in census if value == profile.l]
    everyone = frozenset(range(graph.n))
    for F_L in maximisers:
        without_F_L = delete_edges(graph, F_L.edges)
        residual = list(
            enumerate_maximum_matchings(
                without_F_L, profile.L, force=True, prune_depth=prune_depth
            )
        )
        for F_l in minimisers:
            report.extremal_pairs += 1
            report.residual_matchings += len(residual)
            report.spanning &= F_L.covered | F_l.covered == everyone
            report.two_paths &= all(
                _is_two_path(component)
                for component in alternating_components(F_L, F_l)
            )

            without_F_l = delete_edges(graph, F_l.edges)
            only_F_l = set(F_l.edges) - set(F_L.edges)
            only_F_L = [e for e in F_L.edges if e not in F_l.edges]
            report.difference_maximum &= (
                len(only_F_L) == profile.l and is_matching(without_F_l, only_F_L)
            )
            for H_L in residual:
                report.inclusion &= only_F_l <= set(H_L.edges)
                rest = [e for e in H_L.edges if e not in F_l.edges]
                report.residual_maximum &= (
                    len(rest) == profile.l and is_matching(without_F_l, rest)
                )

    failed = [
        name
        for name in (
            "spanning",
            "two_paths",
            "inclusion",
            "residual_maximum",
            "difference_maximum",
            "no_pendant_siblings",
        )
        if not getattr(report, name)
    ]
    if failed:
        raise InvariantViolationError(f"extremal structure broken: {', '.join(failed)}")
    return report


def verify(
    graph: Graph,
    *,
    limit: int = DEFAULT_ORACLE_LIMIT,
    force: bool = False,
    prune_depth: int = DEFAULT_PRUNE_DEPTH,
) -> VerificationReport:
    """Run every oracle-backed check and collect one outcome per check."""
    options = dict(limit=limit, force=force, prune_depth=prune_depth)
    profile = gap_profile(graph, **options)

    def run(name, check) -> CheckOutcome:
        try:
            result = check()
        except NotApplicableError as e:
            return CheckOutcome(name=name, holds=True, detail=f"not applicable: {e}")
        except InvariantViolationError as e:
            logger.error("%s failed: %s", name, e)
            return CheckOutcome(name=name, holds=False, detail=str(e))
        return CheckOutcome(name=name, holds=True, report=result.model_dump(mode="json"))

    checks = [
        run("pairwise_bound", lambda: check_pairwise_bound(graph, **options)),
        run(
            "perfect_matching_bound",
            lambda: check_perfect_matching_bound(graph, profile, **options),
        ),
        run("pendant_recurrence", lambda: pendant_recurrence(graph, profile, **options)),
        run("extremal_structure", lambda: extremal_structure_check(graph, **options)),
    ]
    return VerificationReport(profile=profile, checks=checks)
