"""Seeded random graphs.

Randomness comes from numpy's ``Generator(PCG64(seed))``; PCG64 is a fixed,
documented bit generator, so a seed reproduces the same graph on every
platform and numpy release that keeps the stream stable.
"""

import itertools
import logging

import numpy as np

from matchgap.constants import DEFAULT_REJECTION_LIMIT
from matchgap.exceptions import GiveUpError, InvalidParameterError
from matchgap.graph import build_graph, is_bridgeless, is_connected
from matchgap.models import Graph

logger = logging.getLogger(__name__)


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def random_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p): pairs in lexicographic order, one uniform draw each."""
    if n < 0:
        raise InvalidParameterError(f"n must be non-negative, got {n}")
    if not 0.0 <= p <= 1.0:
        raise InvalidParameterError(f"p must lie in [0, 1], got {p}")

    pairs = list(itertools.combinations(range(n), 2))
    draws = make_rng(seed).random(len(pairs))
    return build_graph(n, (pair for pair, draw in zip(pairs, draws) if draw < p))


def _pairing(n: int, rng: np.random.Generator) -> list[tuple[int, int]] | None:
    stubs = np.repeat(np.arange(n), 3)
    rng.shuffle(stubs)
    edges = set()
    for u, v in stubs.reshape(-1, 2).tolist():
        edge = (u, v) if u < v else (v, u)
        if u == v or edge in edges:
            return None
        edges.add(edge)
    return sorted(edges)


def random_cubic_bridgeless(
    n: int, seed: int, rejection_limit: int = DEFAULT_REJECTION_LIMIT
) -> Graph:
    """Pairing-model sample, redrawn until simple, connected and bridgeless."""
    if n < 4 or n % 2:
        raise InvalidParameterError(f"cubic graphs need an even n >= 4, got {n}")

    rng = make_rng(seed)
    for attempt in range(1, rejection_limit + 1):
        edges = _pairing(n, rng)
        if edges is None:
            continue
        graph = build_graph(n, edges)
        if is_connected(graph) and is_bridgeless(graph):
            logger.debug("cubic sample on %d vertices after %d attempts", n, attempt)
            return graph

    raise GiveUpError(f"no bridgeless cubic graph on {n} vertices in {rejection_limit} attempts")
