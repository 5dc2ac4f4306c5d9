"""Temporal betweenness centrality: rigorous sampling estimates and exact
baselines for temporal networks, under the shortest-temporal-path and
restless-temporal-walk optimality criteria."""

__version__ = "0.1.0"

from .analysis import (
    DeltaSweepResult,
    RankingComparison,
    delta_sweep,
    topk_jaccard,
)
from .errors import (
    EdgeListParseError,
    EdgeListValidationError,
    PathCountOverflowError,
    ResourceLimitError,
    TemporalBetweennessError,
    WalkExplosionError,
)
from .estimator import (
    ApproximationResult,
    EstimateAccumulator,
    EstimatorConfig,
    NodeEstimate,
    bernstein_bound,
    estimate_betweenness,
    iteration_rng,
    sample_pair,
)
from .exact import (
    ExactResult,
    contribution_fractions,
    enumerate_optimal,
    exact_betweenness,
    static_brandes,
)
from .network import (
    IngestOptions,
    StaticGraph,
    TemporalAdjacency,
    TemporalNetwork,
    build_adjacency,
    from_edges,
    load_edge_list,
    static_projection,
)
from .reporting import RunManifest, write_results
from .restless_walks import accumulate_rtw, compute_rtw
from .shortest_paths import TraversalState, accumulate_stp, compute_stp

__all__ = [
    "ApproximationResult",
    "DeltaSweepResult",
    "EdgeListParseError",
    "EdgeListValidationError",
    "EstimateAccumulator",
    "EstimatorConfig",
    "ExactResult",
    "IngestOptions",
    "NodeEstimate",
    "PathCountOverflowError",
    "RankingComparison",
    "ResourceLimitError",
    "RunManifest",
    "StaticGraph",
    "TemporalAdjacency",
    "TemporalBetweennessError",
    "TemporalNetwork",
    "TraversalState",
    "WalkExplosionError",
    "accumulate_rtw",
    "accumulate_stp",
    "bernstein_bound",
    "build_adjacency",
    "compute_rtw",
    "compute_stp",
    "contribution_fractions",
    "delta_sweep",
    "enumerate_optimal",
    "estimate_betweenness",
    "exact_betweenness",
    "from_edges",
    "iteration_rng",
    "load_edge_list",
    "sample_pair",
    "static_brandes",
    "static_projection",
    "topk_jaccard",
    "write_results",
]
