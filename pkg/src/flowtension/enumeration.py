"""Chunked odometer enumeration of integer boxes with numpy."""

from __future__ import annotations

from typing import Callable, Iterator, Sequence

import numpy as np

DEFAULT_GUARD = 10**8
CHUNK = 1 << 18


class EnumerationGuardError(RuntimeError):
    """Raised when an enumeration would exceed the candidate budget."""


def box_size(sizes: Sequence[int]) -> int:
    total = 1
    for s in sizes:
        total *= int(s)
    return total


def check_guard(total: int, guard: int | None, what: str = "enumeration"):
    if guard is not None and total > guard:
        raise EnumerationGuardError(f"{what} needs {total} candidates, guard is {guard}")


def product_chunks(values: Sequence[np.ndarray], chunk: int = CHUNK) -> Iterator[np.ndarray]:
    """Cartesian product of per-coordinate value arrays, as (m, n) int64 blocks.

    Odometer order: the last coordinate varies fastest.
    """
    values = [np.asarray(v, dtype=np.int64) for v in values]
    n = len(values)
    sizes = [len(v) for v in values]
    total = box_size(sizes)
    if total == 0:
        return
    if n == 0:
        yield np.zeros((1, 0), dtype=np.int64)
        return
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        block = np.empty((len(idx), n), dtype=np.int64)
        for c in range(n - 1, -1, -1):
            idx, digit = np.divmod(idx, sizes[c])
            block[:, c] = values[c][digit]
        yield block


def count_product(
    values: Sequence[np.ndarray],
    accept: Callable[[np.ndarray], np.ndarray],
    guard: int | None = DEFAULT_GUARD,
    what: str = "enumeration",
) -> int:
    """Number of product points x for which ``accept`` (vectorised over rows) is true."""
    check_guard(box_size(len(v) for v in values), guard, what)
    total = 0
    for block in product_chunks(values):
        total += int(np.count_nonzero(accept(block)))
    return total
