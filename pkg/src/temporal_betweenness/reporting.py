"""Run manifests and result serialization.

CSV tables list nodes by original label (numeric-aware order) and format
floating-point values with 17 significant digits so that re-parsing
recovers bit-identical doubles.  Every run also produces a JSON summary
echoing the configuration and certification data.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .analysis import DeltaSweepResult, RankingComparison, label_sort_key
from .estimator import ApproximationResult, EstimatorConfig
from .exact import ExactResult
from .network import IngestOptions, Timestamp

MODES = ("estimate", "exact", "compare-static", "delta-sweep")


@dataclass(frozen=True)
class RunManifest:
    """Everything one CLI invocation needs: mode, dataset, knobs, outputs."""

    mode: str
    input_path: str
    ingest: IngestOptions = IngestOptions()
    estimator: EstimatorConfig | None = None
    criterion: str = "stp"
    delta: Timestamp | None = None
    deltas: list[Timestamp] = field(default_factory=list)
    topk: list[int] = field(default_factory=lambda: [25, 50])
    workers: int = 1
    output_dir: str = "."
    output_format: str = "csv"

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.output_format not in ("csv", "json"):
            raise ValueError(f"unknown output format {self.output_format!r}")
        if self.mode == "estimate" and self.estimator is None:
            raise ValueError("estimate mode requires an estimator configuration")
        if self.mode == "delta-sweep":
            if not self.deltas:
                raise ValueError("delta-sweep mode requires a delta list")
            if any(b <= a for a, b in zip(self.deltas, self.deltas[1:])):
                raise ValueError("delta list must be strictly increasing")
        if self.mode == "compare-static" and not self.topk:
            raise ValueError("compare-static mode requires a top-k list")


def fmt_float(value: float) -> str:
    return format(float(value), ".17g")


def _label_order(labels: list[str]) -> list[int]:
    return sorted(range(len(labels)), key=lambda i: label_sort_key(labels[i]))


def _write_text(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def estimate_rows(result: ApproximationResult) -> list[dict]:
    order = _label_order([rec.label for rec in result.nodes])
    return [
        {
            "node": result.nodes[i].label,
            "estimate": result.nodes[i].estimate,
            "variance": result.nodes[i].variance,
            "bound": result.nodes[i].bound,
        }
        for i in order
    ]


def exact_rows(result: ExactResult) -> list[dict]:
    order = _label_order(result.labels)
    return [
        {"node": result.labels[i], "betweenness": result.values[i]} for i in order
    ]


def sweep_rows(result: DeltaSweepResult) -> list[dict]:
    order = _label_order(result.labels)
    rows = []
    for i in order:
        row = {"node": result.labels[i], "stp": result.stp_values[i]}
        for d, column in zip(result.deltas, result.restless_values):
            row[f"delta_{d}"] = column[i]
        rows.append(row)
    return rows


def compare_rows(
    labels: list[str], temporal: list[float], static: list[float]
) -> list[dict]:
    order = _label_order(labels)
    return [
        {"node": labels[i], "temporal": temporal[i], "static": static[i]}
        for i in order
    ]


def _rows_to_csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    header = list(rows[0])
    lines = [",".join(header)]
    for row in rows:
        cells = []
        for key in header:
            value = row[key]
            cells.append(fmt_float(value) if isinstance(value, float) else str(value))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def estimate_summary(result: ApproximationResult) -> dict:
    from . import __version__

    config = result.config
    return {
        "mode": "estimate",
        "epsilon_prime": result.epsilon_prime,
        "samples": result.samples_run,
        "eta": config.eta,
        "seed": config.seed,
        "criterion": config.criterion,
        "delta": config.delta,
        "exhaustive": config.exhaustive,
        "unreached_pairs": result.unreached_pairs,
        "wall_time_seconds": result.wall_time,
        "version": __version__,
    }


def exact_summary(result: ExactResult, wall_time: float) -> dict:
    from . import __version__

    return {
        "mode": "exact",
        "criterion": result.criterion,
        "delta": result.delta,
        "pair_count": result.pair_count,
        "unreachable_pairs": result.unreachable_pairs,
        "wall_time_seconds": wall_time,
        "version": __version__,
    }


def comparison_summary(
    comparisons: list[RankingComparison], criterion: str, delta, wall_time: float
) -> dict:
    from . import __version__

    return {
        "mode": "compare-static",
        "criterion": criterion,
        "delta": delta,
        "comparisons": [
            {
                "k": c.k,
                "jaccard": c.jaccard,
                "intersection": c.intersection,
                "top_temporal": c.top_a,
                "top_static": c.top_b,
            }
            for c in comparisons
        ],
        "wall_time_seconds": wall_time,
        "version": __version__,
    }


def sweep_summary(result: DeltaSweepResult, wall_time: float) -> dict:
    from . import __version__

    return {
        "mode": "delta-sweep",
        "deltas": result.deltas,
        "columns": ["stp"] + [f"delta_{d}" for d in result.deltas],
        "sweep_mode": result.mode,
        "wall_time_seconds": wall_time,
        "version": __version__,
    }


def write_results(
    rows: list[dict], summary: dict, manifest: RunManifest
) -> list[str]:
    """Write the result table and summary; returns the written paths."""
    out = Path(manifest.output_dir)
    written: list[str] = []
    if manifest.output_format == "csv":
        table = out / "results.csv"
        _write_text(table, _rows_to_csv(rows))
        written.append(str(table))
        summary_path = out / "summary.json"
        _write_text(summary_path, json.dumps(summary, indent=2) + "\n")
        written.append(str(summary_path))
    else:
        payload = {"summary": summary, "rows": rows}
        results_path = out / "results.json"
        _write_text(results_path, json.dumps(payload, indent=2) + "\n")
        written.append(str(results_path))
    return written
