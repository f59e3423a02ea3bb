"""Chunked map + additive reduction, optionally across worker processes."""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")


def tally_sum(fn: Callable[[T], Counter], chunks: Iterable[T], jobs: int = 1) -> Counter:
    """Apply ``fn`` to every chunk and add the resulting tallies.

    Counter addition is commutative, so the result does not depend on
    ``jobs`` or on the order in which workers finish.
    """
    chunks = list(chunks)
    total: Counter = Counter()
    if jobs <= 1 or len(chunks) <= 1:
        for chunk in chunks:
            total.update(fn(chunk))
        return total
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(fn, chunks):
            total.update(part)
    return total
