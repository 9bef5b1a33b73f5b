from collections.abc import Mapping

from matchgap import characterize, gadget, generators, matching, oracle
from matchgap.models import (
    AugmentingPath,
    CharacterizationCertificate,
    CrossCheck,
    EdgeColoring3,
    ExtremalStructureReport,
    ExtremalWitness,
    GapProfile,
    Graph,
    Inflation,
    Matching,
    OracleSettings,
    PairwiseBoundReport,
    PendantReductionTrace,
    PerfectMatchingBoundReport,
    ReductionReport,
    Triangle,
    TwoFactorStats,
    VerificationReport,
)


class MatchGap:
    """Entry point binding the size guards and pruning depth to every call."""

    def __init__(self, settings: OracleSettings | None = None, force: bool = False):
        self.settings = settings or OracleSettings()
        self.force = force

    @property
    def oracle_options(self) -> dict:
        return dict(
            limit=self.settings.oracle_limit,
            force=self.force,
            prune_depth=self.settings.prune_depth,
        )

    @property
    def census_options(self) -> dict:
        return dict(
            limit=self.settings.census_limit,
            force=self.force,
            prune_depth=self.settings.prune_depth,
        )

    def nu(self, graph: Graph) -> int:
        return matching.nu(graph)

    def maximum_matching(self, graph: Graph) -> Matching:
        return matching.maximum_matching(graph)

    def find_augmenting_path(self, graph: Graph, current: Matching) -> AugmentingPath | None:
        return matching.find_augmenting_path(graph, current)

    def gap_profile(self, graph: Graph) -> GapProfile:
        return oracle.gap_profile(graph, **self.oracle_options)

    def check_pairwise_bound(self, graph: Graph) -> PairwiseBoundReport:
        return oracle.check_pairwise_bound(graph, **self.oracle_options)

    def check_perfect_matching_bound(self, graph: Graph) -> PerfectMatchingBoundReport:
        return oracle.check_perfect_matching_bound(graph, **self.oracle_options)

    def pendant_reduction(self, graph: Graph) -> PendantReductionTrace:
        return oracle.pendant_reduction(graph)

    def extremal_structure_check(self, graph: Graph) -> ExtremalStructureReport:
        return oracle.extremal_structure_check(graph, **self.oracle_options)

    def verify(self, graph: Graph) -> VerificationReport:
        return oracle.verify(graph, **self.oracle_options)

    def check_L_eq_2l(
        self, graph: Graph, choice: Mapping[Triangle, int] | None = None
    ) -> CharacterizationCertificate:
        return characterize.check_L_eq_2l(graph, choice)

    def cross_check(
        self, graph: Graph, certificate: CharacterizationCertificate | None = None
    ) -> CrossCheck:
        if certificate is None:
            certificate = self.check_L_eq_2l(graph)
        profile = self.gap_profile(graph)
        return CrossCheck(
            oracle=profile, agrees=certificate.verdict == (profile.L == 2 * profile.l)
        )

    def extremal_witnesses(
        self, graph: Graph, certificate: CharacterizationCertificate | None = None
    ) -> ExtremalWitness:
        return characterize.extremal_witnesses(graph, certificate)

    def inflate(self, graph: Graph) -> Inflation:
        return gadget.inflate(graph)

    def two_factor_stats(self, graph: Graph) -> TwoFactorStats:
        return gadget.odd_cycle_stats(graph, **self.census_options)

    def color3(self, graph: Graph) -> EdgeColoring3 | None:
        return gadget.three_edge_colorable(graph)

    def inflation_L_l(self, inflation: Inflation) -> tuple[int, int]:
        return gadget.inflation_L_l(inflation, **self.census_options)

    def reduction_check(self, graph: Graph) -> ReductionReport:
        return gadget.reduction_check(graph, **self.census_options)

    def random_gnp(self, n: int, p: float, seed: int) -> Graph:
        return generators.random_gnp(n, p, seed)

    def random_cubic_bridgeless(self, n: int, seed: int) -> Graph:
        return generators.random_cubic_bridgeless(
            n, seed, rejection_limit=self.settings.rejection_limit
        )
