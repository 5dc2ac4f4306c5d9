"""Command-line entry point.

Exit codes: 0 on success, 2 on argument/input errors, 3 when a resource
guard aborted the computation.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import __version__
from .analysis import delta_sweep, topk_jaccard
from .errors import (
    EdgeListParseError,
    EdgeListValidationError,
    PathCountOverflowError,
    ResourceLimitError,
)
from .estimator import EstimatorConfig, estimate_betweenness
from .exact import exact_betweenness, static_brandes
from .network import IngestOptions, Timestamp, load_edge_list, static_projection
from .reporting import (
    RunManifest,
    compare_rows,
    comparison_summary,
    estimate_rows,
    estimate_summary,
    exact_rows,
    exact_summary,
    sweep_rows,
    sweep_summary,
    write_results,
)

_DELTA_UNITS = {"s": 1, "m": 60, "h": 3600, "d": 86400}


def parse_delta(text: str) -> Timestamp:
    """Parse a waiting-time bound; s/m/h/d suffixes assume 1-second ticks."""
    text = text.strip()
    multiplier = 1
    if text and text[-1].lower() in _DELTA_UNITS:
        multiplier = _DELTA_UNITS[text[-1].lower()]
        text = text[:-1]
    try:
        value = int(text)
    except ValueError:
        try:
            value = float(text)
        except ValueError:
            raise ValueError(f"cannot parse delta value {text!r}") from None
    value = value * multiplier
    if isinstance(value, float) and value.is_integer():
        value = int(value)
    if value < 0:
        raise ValueError("delta must be non-negative")
    return value


def _parse_int_list(text: str, option: str) -> list[int]:
    try:
        values = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise ValueError(f"cannot parse {option} list {text!r}") from None
    if not values:
        raise ValueError(f"{option} list is empty")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tbc",
        description="Temporal betweenness centrality: sampling estimates "
        "with certified error bounds, exact sweeps, and analysis workflows.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "--mode",
        required=True,
        choices=["estimate", "exact", "compare-static", "delta-sweep"],
    )
    parser.add_argument("--input", required=True, help="edge-list file (u v t)")
    parser.add_argument(
        "--directed", dest="directed", action="store_true", default=True
    )
    parser.add_argument("--undirected", dest="directed", action="store_false")
    parser.add_argument("--strict", dest="strict", action="store_true", default=True)
    parser.add_argument("--non-strict", dest="strict", action="store_false")
    parser.add_argument(
        "--no-dedupe",
        dest="dedupe",
        action="store_false",
        default=True,
        help="keep duplicate (u, v, t) triples",
    )
    parser.add_argument("--criterion", choices=["stp", "rtp"], default="stp")
    parser.add_argument(
        "--delta",
        default=None,
        help="waiting-time bound; comma-separated list in delta-sweep mode; "
        "suffixes s/m/h/d are understood",
    )
    parser.add_argument("--samples", type=int, default=None)
    parser.add_argument("--eta", type=float, default=0.1)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--topk", default="25,50")
    parser.add_argument("--output", default=".", help="output directory")
    parser.add_argument("--format", choices=["csv", "json"], default="csv")
    return parser


def manifest_from_args(args: argparse.Namespace) -> RunManifest:
    ingest = IngestOptions(
        directed=args.directed, strict=args.strict, dedupe=args.dedupe
    )
    deltas: list[Timestamp] = []
    delta: Timestamp | None = None
    if args.mode == "delta-sweep":
        if args.delta is None:
            raise ValueError("delta-sweep mode requires --delta")
        deltas = [parse_delta(tok) for tok in args.delta.split(",") if tok.strip()]
    elif args.delta is not None:
        delta = parse_delta(args.delta)

    estimator = None
    if args.mode == "estimate" or (
        args.mode == "delta-sweep" and args.samples is not None
    ):
        if args.samples is None:
            raise ValueError("estimate mode requires --samples")
        estimator = EstimatorConfig(
            samples=args.samples,
            eta=args.eta,
            criterion=args.criterion if args.mode == "estimate" else "stp",
            delta=delta if args.mode == "estimate" else None,
            seed=args.seed,
            workers=args.workers,
        )
    return RunManifest(
        mode=args.mode,
        input_path=args.input,
        ingest=ingest,
        estimator=estimator,
        criterion=args.criterion,
        delta=delta,
        deltas=deltas,
        topk=_parse_int_list(args.topk, "--topk"),
        workers=args.workers,
        output_dir=args.output,
        output_format=args.format,
    )


def execute(manifest: RunManifest) -> list[str]:
    """Run one manifest end to end; returns the written file paths."""
    network = load_edge_list(manifest.input_path, manifest.ingest)
    if manifest.mode == "estimate":
        result = estimate_betweenness(network, manifest.estimator)
        return write_results(
            estimate_rows(result), estimate_summary(result), manifest
        )
    if manifest.mode == "exact":
        delta = manifest.delta if manifest.criterion == "rtp" else None
        started = time.perf_counter()
        result = exact_betweenness(
            network, manifest.criterion, delta, workers=manifest.workers
        )
        wall = time.perf_counter() - started
        return write_results(exact_rows(result), exact_summary(result, wall), manifest)
    if manifest.mode == "compare-static":
        delta = manifest.delta if manifest.criterion == "rtp" else None
        started = time.perf_counter()
        temporal = exact_betweenness(
            network, manifest.criterion, delta, workers=manifest.workers
        )
        static_scores = static_brandes(static_projection(network))
        static_by_label = dict(zip(network.labels, static_scores))
        comparisons = [
            topk_jaccard(temporal.by_label(), static_by_label, k)
            for k in manifest.topk
        ]
        wall = time.perf_counter() - started
        rows = compare_rows(list(network.labels), temporal.values, static_scores)
        summary = comparison_summary(
            comparisons, manifest.criterion, delta, wall
        )
        return write_results(rows, summary, manifest)
    # delta-sweep
    started = time.perf_counter()
    sweep = delta_sweep(
        network, manifest.deltas, manifest.estimator, workers=manifest.workers
    )
    wall = time.perf_counter() - started
    return write_results(sweep_rows(sweep), sweep_summary(sweep, wall), manifest)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        manifest = manifest_from_args(args)
        written = execute(manifest)
    except (ValueError, EdgeListParseError, EdgeListValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ResourceLimitError, PathCountOverflowError) as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 1
    for path in written:
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
