import enum


class Condition(enum.IntEnum):
    """Numbered conditions of the L = 2l characterization."""

    BIPARTITE = 1
    SIDE_MATCHING = 2
    PATH_PACKING = 3


class ExitCode(enum.IntEnum):
    OK = 0
    VERDICT_FALSE = 1
    USAGE = 2
    INPUT_ERROR = 3
    SIZE_GUARD = 4


class Command(enum.StrEnum):
    NU = "nu"
    GAP = "gap"
    CHECK_2L = "check-2l"
    VERIFY = "verify"
    INFLATE = "inflate"
    TWO_FACTORS = "two-factors"
    COLOR3 = "color3"
    REDUCE_CHECK = "reduce-check"
    GEN = "gen"


class GeneratorKind(enum.StrEnum):
    GNP = "gnp"
    CUBIC = "cubic"
