"""Shortest delta-restless temporal walks and their node contributions.

Under the restless criterion consecutive edges of a walk must be separated
by at most ``delta`` time units, and optimal walks may revisit nodes (a
cycle can be the only way to satisfy the waiting-time constraint).  The
forward traversal is the shared appearance-level BFS with the delta window
applied; the backward pass reconstructs every optimal walk explicitly,
crediting a node only on its first appearance within a walk.

Reconstruction is exponential in the worst case, so it counts queue
insertions against a budget and aborts the pair when exceeded.
"""

from __future__ import annotations

from collections import deque

from .errors import WalkExplosionError
from .network import TemporalAdjacency, Timestamp
from .shortest_paths import _DIST, _PREDS, _SIGMA, TraversalState, temporal_bfs

DEFAULT_EXPLOSION_LIMIT = 10**7


def compute_rtw(
    adjacency: TemporalAdjacency,
    source: int,
    dest: int,
    delta: Timestamp,
    *,
    prune: bool = True,
) -> TraversalState:
    """All shortest delta-restless temporal walks from ``source`` to ``dest``.

    The first hop out of the synthetic source appearance is exempt from the
    delta constraint: the waiting-time bound applies between consecutive
    edges of the walk only.
    """
    if delta < 0:
        raise ValueError("delta must be non-negative")
    return temporal_bfs(adjacency, source, dest, delta=delta, prune=prune)


def accumulate_rtw(
    state: TraversalState, limit: int = DEFAULT_EXPLOSION_LIMIT
) -> dict[int, float]:
    """Per-node fraction of optimal restless walks passing through it.

    Each queue element carries the set of nodes already seen along its walk
    suffix (a structurally shared chain, so enqueues are O(1)); a node is
    credited only the first time it appears within a walk.  Because every
    predecessor sits exactly one distance level down and the queue is FIFO,
    an appearance's suffix count and pending-visit count are both final by
    the time its first copy is dequeued.
    """
    if not state.reached:
        raise ValueError("accumulate_rtw requires a reached destination")
    records = state._records
    appearance_nodes = state.adjacency.appearance_nodes
    source_id = state.adjacency.appearance_count
    source = state.source
    dest = state.dest
    sigma_dest = state.node_sigma[dest]
    dest_level = state.dest_dist

    suffix_counts: dict[int, float] = {}
    visit_counts: dict[int, int] = {}
    insertions = 0
    queue = deque()
    root_chain = (dest, None)
    for za_id in state.dest_appearance_ids:
        zrec = records[za_id]
        if zrec[_DIST] != dest_level or zrec[_SIGMA] == 0:
            continue
        for pa_id in zrec[_PREDS]:
            suffix_counts[pa_id] = suffix_counts.get(pa_id, 0.0) + 1.0
            visit_counts[pa_id] = visit_counts.get(pa_id, 0) + 1
            insertions += 1
            if insertions > limit:
                raise WalkExplosionError(source, dest, limit)
            queue.append((pa_id, root_chain))

    numerators: dict[int, float] = {}
    while queue:
        wa_id, chain = queue.popleft()
        if wa_id == source_id:
            continue
        w = appearance_nodes[wa_id]
        rec = records[wa_id]
        visits = visit_counts[wa_id]
        suffixes = suffix_counts[wa_id]
        link = chain
        while link is not None:
            if link[0] == w:
                break
            link = link[1]
        if link is None:  # first appearance of w along this walk
            numerators[w] = numerators.get(w, 0.0) + suffixes * rec[_SIGMA] / visits
        extended = (w, chain)
        share = suffixes / visits
        for pa_id in rec[_PREDS]:
            suffix_counts[pa_id] = suffix_counts.get(pa_id, 0.0) + share
            visit_counts[pa_id] = visit_counts.get(pa_id, 0) + 1
            insertions += 1
            if insertions > limit:
                raise WalkExplosionError(source, dest, limit)
            queue.append((pa_id, extended))

    return {w: num / sigma_dest for w, num in numerators.items()}
