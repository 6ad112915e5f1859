"""Topology control toolkit: connected low-interference radii assignments
with every radius capped at the longest MST edge."""

from .geometry import (EdgeList, GridSpec, Instance, bucket_of, default_grid,
                       distance, emst, nearest_neighbor, r_min, sub_bucket_of)
from .kernels import BACKEND, USE_NUMBA
from .lab import (gen_clustered_plus_outlier, gen_lower_bound,
                  gen_uniform_random, oracle_max_depth, oracle_min_interference)
from .lnn import LnnResult, NngGraph, lnn, nng
from .network import (InterferenceReport, Network, build_network,
                      interference_at, is_valid, network_interference,
                      uniform_assignment)
from .transform import (ClusterDecomposition, decompose, decomposition_summary,
                        leaders, neighbor_relation, transform, witnesses)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "USE_NUMBA", "__version__",
    "Instance", "GridSpec", "EdgeList",
    "distance", "emst", "r_min", "nearest_neighbor", "default_grid",
    "bucket_of", "sub_bucket_of",
    "Network", "InterferenceReport",
    "uniform_assignment", "build_network", "is_valid", "interference_at",
    "network_interference",
    "NngGraph", "LnnResult", "nng", "lnn",
    "ClusterDecomposition", "decompose", "leaders", "witnesses",
    "neighbor_relation", "transform", "decomposition_summary",
    "gen_lower_bound", "gen_uniform_random", "gen_clustered_plus_outlier",
    "oracle_min_interference", "oracle_max_depth",
]
