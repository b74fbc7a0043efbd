"""Utility functions for base-c tuple indexing, urn enumeration and threading."""

import math
import os
from functools import lru_cache

import numpy as np

from exchkit.core.constants import (
    DEFAULT_ATOL,
    DEFAULT_RTOL,
    MAX_DENSE_CELLS,
    THREADS_ENV_VAR,
)
from exchkit.core.errors import SizeGuardError


def check_dense_size(c: int, k: int) -> int:
    """Return ``c**k`` or raise if a dense table of that size is not allowed.

    Parameters
    ----------
    c : int
        Alphabet size.
    k : int
        Tuple length.

    Returns
    -------
    int
        Number of cells of the dense table.
    """
    if c < 1:
        raise ValueError(f"Alphabet size must be at least 1, got c={c}.")
    if k < 1:
        raise ValueError(f"Tuple length must be at least 1, got k={k}.")
    cells = c**k
    if cells > MAX_DENSE_CELLS:
        raise SizeGuardError(
            f"Dense table of size c**k = {c}**{k} = {cells} exceeds the limit of {MAX_DENSE_CELLS} cells."
        )
    return cells


def encode_tuple(values: tuple[int, ...] | list[int], c: int) -> int:
    """Encode a tuple of alphabet points as a base-c index, first coordinate most significant."""
    index = 0
    for v in values:
        if not 0 <= v < c:
            raise ValueError(f"Point {v} is outside the alphabet 0..{c - 1}.")
        index = index * c + int(v)
    return index


def decode_index(index: int, c: int, k: int) -> tuple[int, ...]:
    """Decode a base-c index into a k-tuple of alphabet points."""
    if not 0 <= index < c**k:
        raise ValueError(f"Index {index} is outside 0..{c**k - 1}.")
    digits = []
    for _ in range(k):
        index, d = divmod(index, c)
        digits.append(d)
    return tuple(reversed(digits))


@lru_cache(maxsize=64)
def tuple_digits(c: int, k: int) -> np.ndarray:
    """Return the ``(c**k, k)`` array of all k-tuples in base-c index order."""
    check_dense_size(c, k)
    grid = np.indices((c,) * k, dtype=np.int64).reshape(k, -1).T
    grid.setflags(write=False)
    return grid


@lru_cache(maxsize=64)
def tuple_type_counts(c: int, k: int) -> np.ndarray:
    """Return the ``(c**k, c)`` array of value counts (the type) of every k-tuple."""
    digits = tuple_digits(c, k)
    counts = np.zeros((digits.shape[0], c), dtype=np.int64)
    for j in range(k):
        counts[np.arange(digits.shape[0]), digits[:, j]] += 1
    counts.setflags(write=False)
    return counts


def weak_compositions(n: int, c: int) -> list[tuple[int, ...]]:
    """Enumerate the weak compositions of ``n`` into ``c`` parts.

    The order is lexicographically descending, so ``(n, 0, ..., 0)`` comes
    first and ``(0, ..., 0, n)`` last.

    Parameters
    ----------
    n : int
        Total to distribute.
    c : int
        Number of parts.

    Returns
    -------
    list of tuple of int
        All count vectors with nonnegative entries summing to ``n``.
    """
    if c == 1:
        return [(n,)]
    out = []
    for first in range(n, -1, -1):
        for rest in weak_compositions(n - first, c - 1):
            out.append((first, *rest))
    return out


def falling_factorial(n: int, k: int) -> int:
    """Return ``n (n-1) ... (n-k+1)``, the number of ordered k-selections from n."""
    if k < 0:
        raise ValueError("k must be nonnegative.")
    if k > n:
        return 0
    return math.perm(n, k)


def isclose_symmetric(a: np.ndarray, b: np.ndarray, rtol: float = DEFAULT_RTOL, atol: float = DEFAULT_ATOL) -> np.ndarray:
    """Elementwise closeness with the tolerance applied symmetrically in ``a`` and ``b``.

    Returns ``|a - b| <= max(atol, rtol * max(|a|, |b|))``.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    scale = np.maximum(np.abs(a), np.abs(b))
    return np.abs(a - b) <= np.maximum(atol, rtol * scale)


def derive_seed(master_seed: int, index: int) -> np.random.SeedSequence:
    """Derive an independent, schedule-free seed stream for instance ``index``."""
    return np.random.SeedSequence([int(master_seed), int(index)])


def resolve_threads(threads: int | None = None) -> int:
    """Resolve the worker count from an explicit value or ``EXCHKIT_THREADS``.

    Parameters
    ----------
    threads : int or None, default None
        Explicit thread count. If None, the environment variable is read and
        defaults to 1 when unset.

    Returns
    -------
    int
        Number of worker threads, at least 1.
    """
    if threads is None:
        raw = os.environ.get(THREADS_ENV_VAR)
        if raw is None or raw.strip() == "":
            return 1
        try:
            threads = int(raw)
        except ValueError as e:
            raise ValueError(f"{THREADS_ENV_VAR} must be an integer >= 1, got {raw!r}.") from e
    if threads < 1:
        raise ValueError(f"Thread count must be >= 1, got {threads}.")
    return threads
