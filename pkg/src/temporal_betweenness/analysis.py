"""Ranking comparison and delta-sweep workflows."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, replace

from .estimator import EstimatorConfig, estimate_betweenness
from .exact import exact_betweenness
from .network import TemporalNetwork, Timestamp


def label_sort_key(label: str):
    """Numeric-aware label ordering: integer labels sort by value."""
    try:
        return (0, int(label), "")
    except ValueError:
        return (1, 0, label)


@dataclass(frozen=True)
class RankingComparison:
    """Top-k agreement between two score maps over the same nodes."""

    k: int
    top_a: list[str]
    top_b: list[str]
    intersection: int
    jaccard: float


def topk_jaccard(
    scores_a: dict[str, float], scores_b: dict[str, float], k: int
) -> RankingComparison:
    """Jaccard similarity of the top-k node sets of two rankings.

    Nodes are ranked by descending score with ties broken by ascending
    label; zero-scored nodes never enter a top-k set, so the sets are
    truncated (with a warning) when fewer than k nodes score above zero.
    The comparison depends on the rankings only, so any strictly monotone
    transformation of either score map leaves the result unchanged.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if scores_a.keys() != scores_b.keys():
        raise ValueError("score maps must cover the same node set")
    if k > len(scores_a):
        raise ValueError(f"k={k} exceeds the number of nodes ({len(scores_a)})")

    def top(scores: dict[str, float], name: str) -> list[str]:
        ranked = sorted(
            scores.items(), key=lambda kv: (-kv[1], label_sort_key(kv[0]))
        )
        nonzero = [label for label, value in ranked if value > 0]
        if len(nonzero) < k:
            warnings.warn(
                f"only {len(nonzero)} nodes have nonzero {name} score; "
                f"top-{k} set truncated"
            )
        return nonzero[:k]

    top_a = top(scores_a, "first")
    top_b = top(scores_b, "second")
    intersection = len(set(top_a) & set(top_b))
    union = len(set(top_a) | set(top_b))
    jaccard = intersection / union if union else 1.0
    return RankingComparison(
        k=k, top_a=top_a, top_b=top_b, intersection=intersection, jaccard=jaccard
    )


@dataclass(frozen=True)
class DeltaSweepResult:
    """One score column per delta plus the unconstrained reference column."""

    labels: list[str]
    deltas: list[Timestamp]
    stp_values: list[float]
    restless_values: list[list[float]]  # parallel to deltas
    mode: str  # "exact" or "estimate"


def delta_sweep(
    network: TemporalNetwork,
    deltas: list[Timestamp],
    config: EstimatorConfig | None = None,
    *,
    workers: int = 1,
) -> DeltaSweepResult:
    """Score every node under each waiting-time bound in ``deltas``.

    With ``config=None`` each column is computed exactly (fanned out to
    ``workers``); otherwise each column is an estimator run derived from
    ``config``, which also carries the worker count, with the same sample
    count, seed, and confidence for every column.
    """
    if not deltas:
        raise ValueError("delta list must be non-empty")
    if any(b <= a for a, b in zip(deltas, deltas[1:])):
        raise ValueError("delta list must be strictly increasing")
    if config is None:
        stp = exact_betweenness(network, "stp", workers=workers).values
        columns = [
            exact_betweenness(network, "rtp", d, workers=workers).values
            for d in deltas
        ]
        mode = "exact"
    else:
        stp_config = replace(config, criterion="stp", delta=None)
        stp = [
            rec.estimate for rec in estimate_betweenness(network, stp_config).nodes
        ]
        columns = []
        for d in deltas:
            rtp_config = replace(config, criterion="rtp", delta=d)
            columns.append(
                [rec.estimate for rec in estimate_betweenness(network, rtp_config).nodes]
            )
        mode = "estimate"
    return DeltaSweepResult(
        labels=list(network.labels),
        deltas=list(deltas),
        stp_values=stp,
        restless_values=columns,
        mode=mode,
    )
