VERSION = "0.3.0"

DEFAULT_ORACLE_LIMIT = 20  # vertices, matching enumeration
DEFAULT_CENSUS_LIMIT = 36  # vertices, 2-factor census of inflations
DEFAULT_PRUNE_DEPTH = 4  # exact nu bound while fewer edges are chosen
DEFAULT_REJECTION_LIMIT = 10_000  # pairing-model attempts per cubic sample

ENV_ORACLE_LIMIT = "MATCHGAP_ORACLE_LIMIT"
ENV_CENSUS_LIMIT = "MATCHGAP_CENSUS_LIMIT"
ENV_PRUNE_DEPTH = "MATCHGAP_PRUNE_DEPTH"

EDGE_COLORS = (0, 1, 2)
