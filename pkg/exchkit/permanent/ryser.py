"""Exact permanents of nonnegative matrices and of their minors."""

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache

import numpy as np

from exchkit.core.constants import MAX_NAIVE_N, MAX_RYSER_N
from exchkit.core.errors import SizeGuardError
from exchkit.core.models import Urn, WeightProfile
from exchkit.utils import resolve_threads

from .scaled import ScaledReal

# Subsets per vectorized Gray-code block.
_BLOCK_BITS = 16


def weight_matrix(lam: WeightProfile, urn: Urn) -> np.ndarray:
    """Return the ``n x n`` matrix ``M[i, j] = lambda_i(x_j)`` over the urn slots."""
    if lam.c != urn.c:
        raise ValueError(f"Profile alphabet size {lam.c} does not match urn alphabet size {urn.c}.")
    if lam.n != urn.n:
        raise ValueError(f"Profile length {lam.n} does not match urn size {urn.n}.")
    return lam.matrix[:, urn.slots]


def _as_square(matrix: np.ndarray, limit: int) -> np.ndarray:
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"Permanent needs a square matrix, got shape {a.shape}.")
    if a.shape[0] > limit:
        raise SizeGuardError(f"Matrix order {a.shape[0]} exceeds the limit of {limit}.")
    if not np.all(np.isfinite(a)) or np.any(a < 0):
        raise ValueError("Matrix entries must be finite and nonnegative.")
    return a


@lru_cache(maxsize=MAX_NAIVE_N + 1)
def _permutation_table(n: int) -> np.ndarray:
    table = np.array(list(itertools.permutations(range(n))), dtype=np.int8).reshape(-1, n)
    table.setflags(write=False)
    return table


def permanent_naive(matrix: np.ndarray) -> ScaledReal:
    """Compute the permanent by summing over all ``n!`` permutations.

    This is the reference oracle for small matrices.

    Parameters
    ----------
    matrix : ndarray
        Square nonnegative matrix of order at most 10.

    Returns
    -------
    ScaledReal
        ``sum_sigma prod_i M[i, sigma(i)]``.
    """
    a = _as_square(matrix, MAX_NAIVE_N)
    n = a.shape[0]
    if n == 0:
        return ScaledReal.one()
    table = _permutation_table(n)
    rows = np.arange(n)
    partials = []
    for start in range(0, table.shape[0], 1 << 18):
        chunk = table[start : start + (1 << 18)]
        partials.append(math.fsum(np.prod(a[rows, chunk], axis=1)))
    return ScaledReal.from_float(math.fsum(partials))


@lru_cache(maxsize=2 * (_BLOCK_BITS + 1))
def _gray_low_bits(width: int, odd_block: bool) -> tuple[np.ndarray, np.ndarray]:
    """Low ``width`` bits of the reflected Gray code inside one block, with the signs they carry.

    For rank ``block * 2**width + t`` the low bits are ``gray(t)`` with bit
    ``width - 1`` flipped in odd blocks; the high bits are ``gray(block)``.
    """
    ranks = np.arange(1 << width, dtype=np.int64)
    codes = ranks ^ (ranks >> 1)
    if odd_block:
        codes ^= 1 << (width - 1)
    bits = ((codes[:, np.newaxis] >> np.arange(width, dtype=np.int64)) & 1).astype(np.uint8)
    parity = bits.sum(axis=1, dtype=np.int64) & 1
    signs = np.where(parity == 1, -1.0, 1.0).astype(np.longdouble)
    bits.setflags(write=False)
    signs.setflags(write=False)
    return bits, signs


def _ryser_block(a: np.ndarray, block: int) -> np.longdouble:
    n = a.shape[0]
    width = min(n, _BLOCK_BITS)
    bits, signs = _gray_low_bits(width, bool(block & 1))
    high = block ^ (block >> 1)
    high_cols = [width + j for j in range(n - width) if (high >> j) & 1]
    row_sums = bits @ a[:, :width].T
    if high_cols:
        row_sums += a[:, high_cols].sum(axis=1)
    if len(high_cols) % 2 == 1:
        signs = -signs
    return np.sum(signs * np.prod(row_sums, axis=1))


def _compensated_sum(values: list[np.longdouble]) -> np.longdouble:
    total = np.longdouble(0.0)
    comp = np.longdouble(0.0)
    for v in values:
        t = total + v
        if abs(total) >= abs(v):
            comp += (total - t) + v
        else:
            comp += (v - t) + total
        total = t
    return total + comp


def permanent_ryser(matrix: np.ndarray, threads: int | None = 1) -> ScaledReal:
    r"""Compute the permanent with Ryser's inclusion-exclusion formula.

    .. math::

        \operatorname{perm}(M) = (-1)^n \sum_{S \subseteq [n]} (-1)^{|S|}
            \prod_{i=1}^n \sum_{j \in S} M_{ij}.

    Subsets are visited in reflected Gray-code order, vectorized in blocks of
    :math:`2^{16}`. Each row is first scaled by an exact power of two so that
    its maximum lies in ``[1/2, 1)``; the scales are folded into the binary
    exponent of the result. Row sums and products are formed in extended
    precision and block partial sums are combined with compensated summation
    in block order, so the result does not depend on ``threads``.

    Parameters
    ----------
    matrix : ndarray
        Square nonnegative matrix of order at most 24.
    threads : int or None, default 1
        Worker threads for the block loop. None reads ``EXCHKIT_THREADS``.

    Returns
    -------
    ScaledReal
        The permanent.
    """
    a = _as_square(matrix, MAX_RYSER_N).copy()
    n = a.shape[0]
    if n == 0:
        return ScaledReal.one()

    row_max = a.max(axis=1)
    if np.any(row_max == 0):
        return ScaledReal.zero()
    exponents = np.frexp(row_max)[1]
    a = np.ldexp(a, -exponents[:, np.newaxis]).astype(np.longdouble)
    scale = int(exponents.sum())

    n_blocks = 1 << max(n - _BLOCK_BITS, 0)
    workers = min(resolve_threads(threads), n_blocks)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(lambda b: _ryser_block(a, b), range(n_blocks)))
    else:
        partials = [_ryser_block(a, b) for b in range(n_blocks)]

    total = _compensated_sum(partials)
    if n % 2 == 1:
        total = -total
    return ScaledReal(max(float(total), 0.0), scale)


def permanent_minor(
    matrix: np.ndarray,
    drop_rows: set[int] | list[int] | tuple[int, ...],
    drop_cols: set[int] | list[int] | tuple[int, ...],
) -> ScaledReal:
    """Permanent of the submatrix left after deleting the given rows and columns.

    Parameters
    ----------
    matrix : ndarray
        Square nonnegative matrix.
    drop_rows, drop_cols : collections of int
        Zero-based indices to delete; both must have the same size.

    Returns
    -------
    ScaledReal
        Permanent of the remaining square submatrix, 1 when it is empty.
    """
    a = np.asarray(matrix, dtype=float)
    rows = sorted(set(int(i) for i in drop_rows))
    cols = sorted(set(int(j) for j in drop_cols))
    if len(rows) != len(cols):
        raise ValueError(f"Must drop as many rows as columns, got {len(rows)} rows and {len(cols)} columns.")
    n = a.shape[0]
    if any(not 0 <= i < n for i in rows) or any(not 0 <= j < a.shape[1] for j in cols):
        raise ValueError("Dropped indices are out of range.")
    sub = np.delete(np.delete(a, rows, axis=0), cols, axis=1)
    if sub.size == 0:
        return ScaledReal.one()
    return permanent_ryser(sub)


class PermanentMinorCache:
    """Memoized permanents of trailing-row minors keyed by a dropped-column bitmask.

    For a bitmask with ``t`` set bits the cached value is the permanent of
    ``M[t:, columns not in mask]``: the first ``t`` rows have been matched
    to the dropped columns. This is the normalizer shared by the exact urn
    laws and by the sequential sampler.

    Parameters
    ----------
    matrix : ndarray
        Square nonnegative matrix.
    """

    def __init__(self, matrix: np.ndarray):
        """Store the matrix and an empty memo."""
        self.matrix = _as_square(matrix, MAX_RYSER_N)
        self.n = self.matrix.shape[0]
        self._memo: dict[int, ScaledReal] = {}

    def __call__(self, mask: int) -> ScaledReal:
        """Permanent of the minor for ``mask``."""
        cached = self._memo.get(mask)
        if cached is not None:
            return cached
        t = int(mask).bit_count()
        keep = [j for j in range(self.n) if not (mask >> j) & 1]
        if t == self.n:
            value = ScaledReal.one()
        else:
            value = permanent_ryser(self.matrix[t:, keep])
        self._memo[mask] = value
        return value

    @property
    def total(self) -> ScaledReal:
        """Permanent of the full matrix."""
        return self(0)

    def __len__(self) -> int:
        """Number of memoized minors."""
        return len(self._memo)
