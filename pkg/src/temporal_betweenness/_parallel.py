"""Fork-based ordered parallel map shared by the estimator and exact sweep.

The shared read-only context (typically the adjacency index) is published
to a module global before forking, so workers inherit it without pickling.
Results come back in task order, which callers rely on for deterministic
reduction.
"""

from __future__ import annotations

import multiprocessing
from typing import Callable, Sequence

_PAYLOAD = None


def _invoke_chunk(chunk):
    fn, context = _PAYLOAD
    return [fn(context, item) for item in chunk]


def ordered_parallel_map(
    fn: Callable,
    context,
    items: Sequence,
    workers: int,
    chunk_size: int | None = None,
) -> list:
    """Return ``[fn(context, item) for item in items]``, fanned out to workers."""
    if workers <= 1 or len(items) <= 1:
        return [fn(context, item) for item in items]
    global _PAYLOAD
    if chunk_size is None:
        chunk_size = max(1, len(items) // (workers * 8))
    chunks = [items[i : i + chunk_size] for i in range(0, len(items), chunk_size)]
    ctx = multiprocessing.get_context("fork")
    _PAYLOAD = (fn, context)
    try:
        with ctx.Pool(processes=workers) as pool:
            out: list = []
            for part in pool.imap(_invoke_chunk, chunks):
                out.extend(part)
        return out
    finally:
        _PAYLOAD = None
