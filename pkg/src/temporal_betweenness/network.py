"""Temporal networks: parsing, validation, indexing, and the static projection.

A temporal network is a set of directed edges ``(u, v, t)`` with ``u != v``
and a non-negative timestamp ``t``.  Node labels from the input are remapped
to dense 0-based indices in order of first appearance *after* time-sorting,
so that two edge lists describing the same network (in any line order) load
to identical objects.  Timestamps are kept as Python ints when every
timestamp in the input is integral, otherwise as floats; comparisons are
exact either way.
"""

from __future__ import annotations

import io
import os
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from typing import IO, Iterable, Iterator

from .errors import EdgeListParseError, EdgeListValidationError

Timestamp = int | float
TemporalEdge = tuple[int, int, Timestamp]
VertexAppearance = tuple[int, Timestamp]


@dataclass(frozen=True)
class IngestOptions:
    """Edge-list loading switches.

    directed: treat each input line as one directed edge; otherwise emit
        both orientations at the same timestamp.
    strict: temporal paths require strictly increasing timestamps; in
        non-strict mode consecutive edges may share a timestamp.
    dedupe: drop exact duplicate ``(u, v, t)`` triples (duplicates would
        double path counts without changing the path sets).
    """

    directed: bool = True
    strict: bool = True
    dedupe: bool = True


@dataclass(eq=True)
class TemporalNetwork:
    """An immutable, time-sorted temporal edge list with dense node indices."""

    labels: list[str]
    edges: list[TemporalEdge]
    strict: bool = True
    dropped_self_loops: int = field(default=0, compare=False)
    dropped_duplicates: int = field(default=0, compare=False)

    def __post_init__(self):
        self._label_index = {label: i for i, label in enumerate(self.labels)}

    @property
    def node_count(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def timespan(self) -> Timestamp:
        if not self.edges:
            return 0
        return self.edges[-1][2] - self.edges[0][2]

    def index_of(self, label: str) -> int:
        return self._label_index[label]

    def to_text(self) -> str:
        """Serialize back to edge-list text (original labels, sorted order)."""
        lines = []
        for u, v, t in self.edges:
            lines.append(f"{self.labels[u]} {self.labels[v]} {t}")
        return "\n".join(lines) + ("\n" if lines else "")

    def save(self, path: str | os.PathLike) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_text())


def _parse_timestamp(token: str) -> Timestamp:
    try:
        return int(token)
    except ValueError:
        return float(token)


def _iter_lines(source) -> Iterator[str]:
    if isinstance(source, (str, os.PathLike)):
        with open(source, "rb") as fh:
            yield from io.TextIOWrapper(fh, encoding="utf-8")
        return
    for line in source:
        if isinstance(line, bytes):
            line = line.decode("utf-8")
        yield line


def load_edge_list(
    source: str | os.PathLike | IO,
    options: IngestOptions = IngestOptions(),
) -> TemporalNetwork:
    """Load a temporal network from SNAP-style edge-list text.

    One ``u v t`` triple per whitespace-separated line; lines starting with
    ``#`` and blank lines are skipped.  ``source`` may be a path or an open
    text/binary stream.

    Raises EdgeListParseError for malformed lines, EdgeListValidationError
    for negative timestamps or an input with no edges.
    """
    raw: list[tuple[str, str, Timestamp]] = []
    dropped_loops = 0
    saw_float = False
    for line_no, line in enumerate(_iter_lines(source), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = stripped.split()
        if len(fields) != 3:
            raise EdgeListParseError(
                f"expected 'u v t', got {len(fields)} fields", line_no
            )
        u, v, token = fields
        try:
            t = _parse_timestamp(token)
        except ValueError:
            raise EdgeListParseError(f"bad timestamp {token!r}", line_no) from None
        if t != t:  # NaN
            raise EdgeListParseError(f"bad timestamp {token!r}", line_no)
        if t < 0:
            raise EdgeListValidationError(f"negative timestamp {token!r}", line_no)
        if isinstance(t, float):
            saw_float = True
        if u == v:
            dropped_loops += 1
            continue
        raw.append((u, v, t))
        if not options.directed:
            raw.append((v, u, t))
    if not raw and dropped_loops == 0:
        raise EdgeListValidationError("input contains no edges")
    if saw_float:
        raw = [(u, v, float(t)) for u, v, t in raw]
    network = _build_network(raw, options)
    network.dropped_self_loops = dropped_loops
    return network


def from_edges(
    edges: Iterable[tuple[str | int, str | int, Timestamp]],
    options: IngestOptions = IngestOptions(),
    nodes: Iterable[str | int] = (),
) -> TemporalNetwork:
    """Build a network from in-memory triples; labels are normalized to str.

    ``nodes`` pre-registers labels (useful for declaring isolated nodes);
    pre-registered labels come first in the dense index assignment.
    """
    raw: list[tuple[str, str, Timestamp]] = []
    dropped_loops = 0
    for u, v, t in edges:
        if t < 0:
            raise EdgeListValidationError(f"negative timestamp {t!r}")
        if str(u) == str(v):
            dropped_loops += 1
            continue
        raw.append((str(u), str(v), t))
        if not options.directed:
            raw.append((str(v), str(u), t))
    network = _build_network(raw, options, seed_labels=[str(x) for x in nodes])
    network.dropped_self_loops = dropped_loops
    return network


def _build_network(
    raw: list[tuple[str, str, Timestamp]],
    options: IngestOptions,
    seed_labels: Iterable[str] = (),
) -> TemporalNetwork:
    # Stable sort keeps input order within equal timestamps, which fixes
    # both the tie order and the dense index assignment.
    raw.sort(key=lambda e: e[2])
    dropped_duplicates = 0
    if options.dedupe:
        seen: set[tuple[str, str, Timestamp]] = set()
        unique = []
        for triple in raw:
            if triple in seen:
                dropped_duplicates += 1
                continue
            seen.add(triple)
            unique.append(triple)
        raw = unique
    labels: list[str] = []
    index: dict[str, int] = {}
    for label in seed_labels:
        if label not in index:
            index[label] = len(labels)
            labels.append(label)
    edges: list[TemporalEdge] = []
    for u, v, t in raw:
        ui = index.get(u)
        if ui is None:
            ui = index[u] = len(labels)
            labels.append(u)
        vi = index.get(v)
        if vi is None:
            vi = index[v] = len(labels)
            labels.append(v)
        edges.append((ui, vi, t))
    return TemporalNetwork(
        labels=labels,
        edges=edges,
        strict=options.strict,
        dropped_duplicates=dropped_duplicates,
    )


class TemporalAdjacency:
    """Time-indexed out-neighbor structure over a temporal network.

    For each node ``v`` the distinct out-timestamps are kept sorted, so the
    first out-timestamp after a query time is a binary search away.  Every
    pair ``(v, t)`` such that an edge arrives at ``v`` at time ``t`` (a
    vertex appearance) is assigned a dense integer id; traversals key their
    per-call sparse state by these ids.  Id ``appearance_count`` is reserved
    for the synthetic source appearance created per traversal.

    Immutable after construction; any number of traversals may read it
    concurrently.
    """

    def __init__(self, network: TemporalNetwork):
        self.network = network
        self.strict = network.strict
        n = network.node_count
        self.out_times: list[list[Timestamp]] = [[] for _ in range(n)]
        # Per (node, time slot): target node indices and their appearance ids.
        self.out_targets: list[list[list[int]]] = [[] for _ in range(n)]
        self.out_slot_ids: list[list[list[int]]] = [[] for _ in range(n)]
        self.appearance_nodes: list[int] = []
        self.appearance_times: list[Timestamp] = []
        appearance_ids: dict[VertexAppearance, int] = {}
        for u, v, t in network.edges:
            times = self.out_times[u]
            if not times or times[-1] != t:
                times.append(t)
                self.out_targets[u].append([])
                self.out_slot_ids[u].append([])
            va = (v, t)
            va_id = appearance_ids.get(va)
            if va_id is None:
                va_id = appearance_ids[va] = len(self.appearance_nodes)
                self.appearance_nodes.append(v)
                self.appearance_times.append(t)
            self.out_targets[u][-1].append(v)
            self.out_slot_ids[u][-1].append(va_id)
        self._appearance_ids = appearance_ids

    @property
    def node_count(self) -> int:
        return self.network.node_count

    @property
    def appearance_count(self) -> int:
        return len(self.appearance_nodes)

    def vertex_appearances(self) -> Iterator[VertexAppearance]:
        return iter(self._appearance_ids)

    def first_slot_after(self, v: int, t: Timestamp) -> int:
        """Index of the first out-time slot of ``v`` usable after time ``t``."""
        if self.strict:
            return bisect_right(self.out_times[v], t)
        return bisect_left(self.out_times[v], t)

    def first_out_time_after(self, v: int, t: Timestamp) -> Timestamp | None:
        """First out-timestamp of ``v`` after ``t`` (after or at, non-strict)."""
        times = self.out_times[v]
        j = self.first_slot_after(v, t)
        return times[j] if j < len(times) else None

    def neighbors_after(
        self, v: int, t: Timestamp
    ) -> Iterator[tuple[Timestamp, list[int]]]:
        """Yield ``(t', targets)`` for each usable out-time of ``v`` after ``t``."""
        times = self.out_times[v]
        targets = self.out_targets[v]
        for j in range(self.first_slot_after(v, t), len(times)):
            yield times[j], targets[j]


def build_adjacency(network: TemporalNetwork) -> TemporalAdjacency:
    return TemporalAdjacency(network)


@dataclass(eq=True)
class StaticGraph:
    """Directed static projection: temporal multiplicities collapsed."""

    node_count: int
    adjacency: list[list[int]]

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency)


def static_projection(network: TemporalNetwork) -> StaticGraph:
    """Collapse timestamps: edge (u, v) present iff some (u, v, t) exists."""
    n = network.node_count
    seen: list[set[int]] = [set() for _ in range(n)]
    for u, v, _ in network.edges:
        seen[u].add(v)
    return StaticGraph(node_count=n, adjacency=[sorted(s) for s in seen])
