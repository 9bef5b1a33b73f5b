from .api import MatchGap
from .enums import Condition, ExitCode
from . import characterize, gadget, matching, oracle
from .edgelist import parse_edgelist, write_edgelist
from .graph import build_graph
from .models import (
    CharacterizationCertificate,
    GapProfile,
    Graph,
    Matching,
    OracleSettings,
    TwoFactorStats,
)

__all__ = (
    "MatchGap",
    "Condition",
    "ExitCode",
    "characterize",
    "gadget",
    "matching",
    "oracle",
    "parse_edgelist",
    "write_edgelist",
    "build_graph",
    "CharacterizationCertificate",
    "GapProfile",
    "Graph",
    "Matching",
    "OracleSettings",
    "TwoFactorStats",
)
