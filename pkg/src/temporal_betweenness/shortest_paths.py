"""Per-pair shortest temporal path computation and node contributions.

The traversal is a BFS over vertex appearances (node, time) seeded at a
synthetic source appearance ``(s, 0)``.  Once the destination's minimum
distance is known it prunes every appearance at that distance or beyond.
The result records, per appearance, the minimum distance, the number of
shortest time-respecting walks reaching it, and its predecessor
appearances; at optimal length such walks never revisit a node, so the
counts are exactly the shortest temporal path counts.

Path counters are overflow-checked against a 128-bit range: counts can
grow exponentially, and an error is preferable to a silent wrap.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

from .errors import PathCountOverflowError
from .network import TemporalAdjacency, Timestamp, VertexAppearance

MAX_PATH_COUNT = 2**128 - 1

# Internal per-appearance record layout: [dist, sigma, preds].
_DIST, _SIGMA, _PREDS = 0, 1, 2


@dataclass
class TraversalState:
    """Scratch state produced by one source-destination traversal.

    Appearance-level state is held sparsely in ``_records`` keyed by the
    adjacency's appearance ids (the synthetic source uses the reserved id);
    the ``va_*`` properties materialize (node, time)-keyed views of it.
    """

    adjacency: TemporalAdjacency
    source: int
    dest: int
    delta: Timestamp | None
    node_dist: dict[int, int]
    node_sigma: dict[int, int]
    dest_dist: float  # math.inf when unreached
    dest_appearance_ids: list[int] = field(default_factory=list)
    _records: dict[int, list] = field(default_factory=dict)

    @property
    def reached(self) -> bool:
        return self.dest_dist < math.inf

    def _appearance(self, va_id: int) -> VertexAppearance:
        adj = self.adjacency
        if va_id == adj.appearance_count:
            return (self.source, 0)
        return (adj.appearance_nodes[va_id], adj.appearance_times[va_id])

    @property
    def va_dist(self) -> dict[VertexAppearance, int]:
        return {self._appearance(i): r[_DIST] for i, r in self._records.items()}

    @property
    def va_sigma(self) -> dict[VertexAppearance, int]:
        return {self._appearance(i): r[_SIGMA] for i, r in self._records.items()}

    @property
    def va_pred(self) -> dict[VertexAppearance, list[VertexAppearance]]:
        return {
            self._appearance(i): [self._appearance(p) for p in r[_PREDS]]
            for i, r in self._records.items()
        }


def temporal_bfs(
    adjacency: TemporalAdjacency,
    source: int,
    dest: int,
    *,
    delta: Timestamp | None = None,
    prune: bool = True,
    _dequeue_log: list | None = None,
) -> TraversalState:
    """Count optimal walks from ``source`` to ``dest`` over vertex appearances.

    ``delta`` bounds the waiting time between consecutive edges (the first
    hop out of the synthetic source is exempt); ``None`` means unbounded,
    i.e. the plain shortest-temporal-path criterion.  ``prune=False``
    disables the destination-distance cutoff (for validation only; the
    outputs are unchanged).
    """
    n = adjacency.node_count
    if source == dest:
        raise ValueError("source and destination must differ")
    if not (0 <= source < n and 0 <= dest < n):
        raise ValueError(f"node index out of range (n={n})")
    if delta is not None and delta < 0:
        raise ValueError("delta must be non-negative")

    out_times = adjacency.out_times
    out_slot_ids = adjacency.out_slot_ids
    appearance_nodes = adjacency.appearance_nodes
    source_id = adjacency.appearance_count
    strict = adjacency.strict

    records: dict[int, list] = {source_id: [0, 1, []]}
    node_dist = {source: 0}
    node_sigma = {source: 1}
    dest_dist = math.inf
    dest_appearance_ids: list[int] = []

    queue = deque()
    queue.append((source_id, source, 0))
    while queue:
        va_id, v, t = queue.popleft()
        rec = records[va_id]
        dist_vt = rec[_DIST]
        if _dequeue_log is not None:
            _dequeue_log.append(dist_vt)
        if prune and dist_vt >= dest_dist:
            continue
        sigma_vt = rec[_SIGMA]
        times = out_times[v]
        slots = out_slot_ids[v]
        next_dist = dist_vt + 1
        if delta is None or dist_vt == 0:
            time_limit = math.inf
        else:
            time_limit = t + delta
        for j in range(adjacency.first_slot_after(v, t), len(times)):
            t2 = times[j]
            if t2 > time_limit:
                break
            for wa_id in slots[j]:
                wrec = records.get(wa_id)
                if wrec is None:
                    w = appearance_nodes[wa_id]
                    # appearances first reached at the destination's level
                    # cannot lie on an optimal path; skipping them here
                    # avoids enqueuing the (typically huge) final frontier
                    if next_dist >= dest_dist and prune and w != dest:
                        continue
                    wrec = records[wa_id] = [next_dist, 0, []]
                    if w not in node_dist:
                        node_dist[w] = next_dist
                        if w == dest:
                            dest_dist = next_dist
                    if w == dest:
                        dest_appearance_ids.append(wa_id)
                    queue.append((wa_id, w, t2))
                if wrec[_DIST] == next_dist:
                    total = wrec[_SIGMA] + sigma_vt
                    if total > MAX_PATH_COUNT:
                        raise PathCountOverflowError(source, dest)
                    wrec[_SIGMA] = total
                    wrec[_PREDS].append(va_id)
                    w = appearance_nodes[wa_id]
                    if node_dist[w] == next_dist:
                        node_total = node_sigma.get(w, 0) + sigma_vt
                        if node_total > MAX_PATH_COUNT:
                            raise PathCountOverflowError(source, dest)
                        node_sigma[w] = node_total

    return TraversalState(
        adjacency=adjacency,
        source=source,
        dest=dest,
        delta=delta,
        node_dist=node_dist,
        node_sigma=node_sigma,
        dest_dist=dest_dist,
        dest_appearance_ids=dest_appearance_ids,
        _records=records,
    )


def compute_stp(
    adjacency: TemporalAdjacency, source: int, dest: int, *, prune: bool = True
) -> TraversalState:
    """All shortest temporal paths from ``source`` to ``dest``."""
    return temporal_bfs(adjacency, source, dest, prune=prune)


def accumulate_stp(state: TraversalState) -> dict[int, float]:
    """Per-node fraction of shortest temporal paths passing through it.

    Walks the predecessor DAG backward from the destination appearances,
    counting for each appearance the number of path suffixes that reach the
    destination.  Node totals stay integral until a single final division
    by the total path count, so returned values are exact rationals in
    (0, 1].  Source and destination never appear in the map.
    """
    if not state.reached:
        raise ValueError("accumulate_stp requires a reached destination")
    records = state._records
    appearance_nodes = state.adjacency.appearance_nodes
    source_id = state.adjacency.appearance_count
    sigma_dest = state.node_sigma[state.dest]
    dest_level = state.dest_dist

    suffix_counts: dict[int, int] = {}
    enqueued: set[int] = set()
    queue = deque()
    for za_id in state.dest_appearance_ids:
        zrec = records[za_id]
        if zrec[_DIST] != dest_level or zrec[_SIGMA] == 0:
            continue
        for pa_id in zrec[_PREDS]:
            suffix_counts[pa_id] = suffix_counts.get(pa_id, 0) + 1
            if pa_id not in enqueued:
                enqueued.add(pa_id)
                queue.append(pa_id)

    numerators: dict[int, int] = {}
    while queue:
        wa_id = queue.popleft()
        if wa_id == source_id:
            continue
        w = appearance_nodes[wa_id]
        rec = records[wa_id]
        suffixes = suffix_counts[wa_id]
        numerators[w] = numerators.get(w, 0) + suffixes * rec[_SIGMA]
        for pa_id in rec[_PREDS]:
            suffix_counts[pa_id] = suffix_counts.get(pa_id, 0) + suffixes
            if pa_id not in enqueued:
                enqueued.add(pa_id)
                queue.append(pa_id)

    return {w: num / sigma_dest for w, num in numerators.items()}
