"""Sweep parallelism control.

The environment variable MACREGION_THREADS caps the number of worker threads
used by grid sweeps; 0 or unset means auto (one per CPU, capped at 8).  All
swept functions are pure, so results do not depend on the worker count.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor


def thread_count() -> int:
    raw = os.environ.get("MACREGION_THREADS", "0")
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"MACREGION_THREADS={raw!r} is not an integer")
    if n < 0:
        raise ValueError("MACREGION_THREADS must be >= 0")
    if n == 0:
        return min(os.cpu_count() or 1, 8)
    return n


def parallel_map(fn, items):
    """Map ``fn`` over ``items`` preserving order, threaded when allowed."""
    items = list(items)
    workers = min(thread_count(), len(items)) or 1
    if workers == 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
