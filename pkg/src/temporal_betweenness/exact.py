"""Ground-truth computations: exact temporal betweenness, brute-force
enumerators for tiny instances, and the static Brandes baseline.

Exact temporal betweenness is an all-ordered-pairs sweep of the same
per-pair engines used by the sampling estimator: one validated code path,
zero sampling error.  The enumerators explore every temporal path or
restless walk explicitly and exist purely to validate the engines; they
are exponential and guarded accordingly.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from collections import deque
from dataclasses import dataclass

from ._parallel import ordered_parallel_map
from .errors import ResourceLimitError
from .network import (
    StaticGraph,
    TemporalEdge,
    TemporalNetwork,
    Timestamp,
    build_adjacency,
)
from .restless_walks import DEFAULT_EXPLOSION_LIMIT, accumulate_rtw, compute_rtw
from .shortest_paths import accumulate_stp, compute_stp


@dataclass(frozen=True)
class ExactResult:
    """Exact per-node temporal betweenness (dense-index order)."""

    labels: list[str]
    values: list[float]
    criterion: str
    delta: Timestamp | None
    pair_count: int
    unreachable_pairs: int

    def by_label(self) -> dict[str, float]:
        return dict(zip(self.labels, self.values))


def _exact_source_task(context, source):
    adjacency, criterion, delta, limit = context
    n = adjacency.node_count
    totals: dict[int, float] = {}
    unreachable = 0
    for dest in range(n):
        if dest == source:
            continue
        if criterion == "rtp":
            state = compute_rtw(adjacency, source, dest, delta)
        else:
            state = compute_stp(adjacency, source, dest)
        if not state.reached:
            unreachable += 1
            continue
        if criterion == "rtp":
            contributions = accumulate_rtw(state, limit)
        else:
            contributions = accumulate_stp(state)
        for node, value in contributions.items():
            totals[node] = totals.get(node, 0.0) + value
    return totals, unreachable


def exact_betweenness(
    network: TemporalNetwork,
    criterion: str = "stp",
    delta: Timestamp | None = None,
    *,
    workers: int = 1,
    explosion_limit: int = DEFAULT_EXPLOSION_LIMIT,
) -> ExactResult:
    """Average each node's contribution over all n(n-1) ordered pairs."""
    n = network.node_count
    if n < 2:
        raise ValueError("network must have at least two nodes")
    criterion = criterion.lower()
    if criterion not in ("stp", "rtp"):
        raise ValueError(f"unknown criterion {criterion!r}")
    if (delta is None) == (criterion == "rtp"):
        raise ValueError("delta is required exactly for criterion 'rtp'")
    adjacency = build_adjacency(network)
    context = (adjacency, criterion, delta, explosion_limit)
    per_source = ordered_parallel_map(
        _exact_source_task, context, list(range(n)), workers
    )
    totals = [0.0] * n
    unreachable = 0
    for source_totals, source_unreachable in per_source:
        unreachable += source_unreachable
        for node, value in source_totals.items():
            totals[node] += value
    pair_count = n * (n - 1)
    return ExactResult(
        labels=list(network.labels),
        values=[t / pair_count for t in totals],
        criterion=criterion,
        delta=delta,
        pair_count=pair_count,
        unreachable_pairs=unreachable,
    )


def enumerate_optimal(
    network: TemporalNetwork,
    source: int,
    dest: int,
    criterion: str = "stp",
    delta: Timestamp | None = None,
    *,
    node_limit: int = 12,
    step_limit: int = 10**7,
) -> list[list[TemporalEdge]]:
    """Every optimal path (stp) or restless walk (rtp) by exhaustive search.

    Paths may not revisit nodes; walks may, with length capped by the
    number of vertex appearances (an optimal walk never repeats one).
    Returns each minimum-length edge sequence explicitly.
    """
    n = network.node_count
    if n > node_limit:
        raise ResourceLimitError(
            f"enumeration limited to {node_limit} nodes, network has {n}"
        )
    if source == dest or not (0 <= source < n and 0 <= dest < n):
        raise ValueError("invalid source/destination pair")
    criterion = criterion.lower()
    if criterion not in ("stp", "rtp"):
        raise ValueError(f"unknown criterion {criterion!r}")
    walks_allowed = criterion == "rtp"
    if (delta is None) == walks_allowed:
        raise ValueError("delta is required exactly for criterion 'rtp'")

    out_times: list[list[Timestamp]] = [[] for _ in range(n)]
    out_nodes: list[list[int]] = [[] for _ in range(n)]
    for u, v, t in network.edges:
        out_times[u].append(t)
        out_nodes[u].append(v)
    length_cap = len({(v, t) for _, v, t in network.edges})
    strict = network.strict
    steps = 0

    best = math.inf
    found: list[list[TemporalEdge]] = []
    prefix: list[TemporalEdge] = []
    visited = {source} if not walks_allowed else None

    def extend(node: int, now: Timestamp | None, length: int) -> None:
        nonlocal best, steps
        if length + 1 > best:
            return
        times = out_times[node]
        if now is None:
            start = 0
        elif strict:
            start = bisect_right(times, now)
        else:
            start = bisect_left(times, now)
        for j in range(start, len(times)):
            t2 = times[j]
            if delta is not None and now is not None and t2 - now > delta:
                break
            steps += 1
            if steps > step_limit:
                raise ResourceLimitError(
                    f"enumeration exceeded {step_limit} steps for pair "
                    f"({source}, {dest})"
                )
            w = out_nodes[node][j]
            prefix.append((node, w, t2))
            if w == dest:
                if length + 1 < best:
                    best = length + 1
                    found.clear()
                if length + 1 == best:
                    found.append(list(prefix))
            elif walks_allowed:
                if length + 1 < length_cap:
                    extend(w, t2, length + 1)
            elif w not in visited:
                visited.add(w)
                extend(w, t2, length + 1)
                visited.remove(w)
            prefix.pop()

    extend(source, None, 0)
    return found


def contribution_fractions(
    walks: list[list[TemporalEdge]], source: int, dest: int
) -> dict[int, float]:
    """Fraction of the given optimal walks on which each node is internal."""
    counts: dict[int, int] = {}
    for walk in walks:
        internal = {u for u, _, _ in walk} | {v for _, v, _ in walk}
        internal.discard(source)
        internal.discard(dest)
        for node in internal:
            counts[node] = counts.get(node, 0) + 1
    return {node: c / len(walks) for node, c in counts.items()}


def static_brandes(graph: StaticGraph) -> list[float]:
    """Directed static betweenness, normalized by 1/(n(n-1)).

    The normalization matches the temporal definition so static and
    temporal scores are directly comparable; any positive scaling would
    leave rankings unchanged.
    """
    n = graph.node_count
    adjacency = graph.adjacency
    betweenness = [0.0] * n
    for s in range(n):
        order: list[int] = []
        preds: list[list[int]] = [[] for _ in range(n)]
        sigma = [0] * n
        dist = [-1] * n
        sigma[s] = 1
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in adjacency[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
                    preds[w].append(v)
        dependency = [0.0] * n
        while order:
            w = order.pop()
            for v in preds[w]:
                dependency[v] += sigma[v] / sigma[w] * (1.0 + dependency[w])
            if w != s:
                betweenness[w] += dependency[w]
    if n < 2:
        return betweenness
    norm = n * (n - 1)
    return [b / norm for b in betweenness]
