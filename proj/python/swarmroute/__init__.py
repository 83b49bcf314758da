"""Bandwidth-aware routing with particle swarm and genetic optimizers."""

from ._core import (
    Network,
    SwarmrouteError,
    brute_force_best,
    compare,
    decode,
    fitness,
    make_network,
    partition_regions,
    run_ga,
    run_pso,
)

__all__ = [
    "Network",
    "SwarmrouteError",
    "brute_force_best",
    "compare",
    "decode",
    "fitness",
    "make_network",
    "partition_regions",
    "run_ga",
    "run_pso",
]
