"""Extreme points of weighted exchangeable laws and their weighted i.i.d. counterparts."""

import math

import numpy as np

from exchkit.core.constants import MAX_ENUMERATION_N
from exchkit.core.errors import SizeGuardError
from exchkit.core.models import TupleDistribution, Urn, WeightProfile
from exchkit.permanent import PermanentMinorCache, permanent_minor, weight_matrix
from exchkit.utils import falling_factorial, tuple_type_counts


def check_urn_request(lam: WeightProfile, urn: Urn, k: int) -> None:
    """Validate an ``(lambda, urn, k)`` request against the enumeration guards."""
    if lam.c != urn.c:
        raise ValueError(f"Profile alphabet size {lam.c} does not match urn alphabet size {urn.c}.")
    if lam.n != urn.n:
        raise ValueError(f"Urn holds {urn.n} points but the profile has {lam.n} weight functions.")
    if urn.n > MAX_ENUMERATION_N:
        raise SizeGuardError(f"Urn size {urn.n} exceeds the exact enumeration limit of {MAX_ENUMERATION_N}.")
    if not 1 <= k <= urn.n:
        raise ValueError(f"k must be in 1..{urn.n}, got {k}.")


def minor_cache(lam: WeightProfile, urn: Urn) -> PermanentMinorCache:
    """Permanent-minor cache of the weight matrix of ``urn``."""
    return PermanentMinorCache(weight_matrix(lam, urn))


def block_starts(urn: Urn) -> np.ndarray:
    """Index of the first slot of each value block."""
    counts = np.asarray(urn.counts, dtype=np.int64)
    return np.concatenate([[0], np.cumsum(counts)[:-1]])


def canonical_mask(urn: Urn, used: np.ndarray | tuple[int, ...]) -> int:
    """Bitmask of the first ``used[v]`` slots of every value block ``v``."""
    starts = block_starts(urn)
    mask = 0
    for v, m in enumerate(used):
        for s in range(int(m)):
            mask |= 1 << int(starts[v] + s)
    return mask


def distinct_support(urn: Urn, k: int) -> np.ndarray:
    """Boolean mask over ``X^k`` of value tuples reachable without replacement."""
    types = tuple_type_counts(urn.c, k)
    return np.all(types <= np.asarray(urn.counts), axis=1)


def arrangement_counts(urn: Urn, k: int) -> np.ndarray:
    """Number of distinct-slot index tuples mapping to each value tuple, ``prod_v (n_v)_{nu_v}``."""
    types = tuple_type_counts(urn.c, k)
    out = np.ones(types.shape[0])
    for v, n_v in enumerate(urn.counts):
        table = np.array([falling_factorial(n_v, m) for m in range(k + 1)], dtype=float)
        out *= table[types[:, v]]
    return out


def conditional_weights(
    lam: WeightProfile,
    urn: Urn,
    k: int,
    cache: PermanentMinorCache | None = None,
) -> np.ndarray:
    """Unnormalized urn-conditional probabilities of every value tuple in ``X^k``.

    A value tuple ``z`` with type ``nu`` receives
    ``prod_{i<=k} lambda_i(z_i) * prod_v (n_v)_{nu_v} * perm(minor) / perm(M)``,
    where the minor keeps rows ``k+1..n`` and the columns of the slots not
    used by ``z``. Slots with the same value give identical columns, so the
    minor is taken at the canonical slots of ``nu``.
    """
    check_urn_request(lam, urn, k)
    cache = cache if cache is not None else minor_cache(lam, urn)
    types = tuple_type_counts(urn.c, k)
    feasible = distinct_support(urn, k)
    out = np.zeros(types.shape[0])
    if not np.any(feasible):
        return out

    unique_types, inverse = np.unique(types[feasible], axis=0, return_inverse=True)
    total = cache.total
    minors = np.array([(cache(canonical_mask(urn, nu)) / total).to_float() for nu in unique_types])
    tilt = lam.head(k).tilt()
    out[feasible] = tilt[feasible] * arrangement_counts(urn, k)[feasible] * minors[inverse.reshape(-1)]
    return out


def urn_conditional(
    lam: WeightProfile,
    urn: Urn,
    k: int,
    cache: PermanentMinorCache | None = None,
) -> TupleDistribution:
    """Law of the first ``k`` coordinates given the urn (an extreme point).

    The urn is emptied in order: coordinate ``i`` picks a remaining slot, and a
    full ordering ``sigma`` has probability proportional to
    ``prod_i lambda_i(x_{sigma(i)})``. For ``k = n`` this is the extreme point
    itself, and for constant weights it is uniform sampling without
    replacement.

    Parameters
    ----------
    lam : WeightProfile
        Weight functions ``lambda_1..lambda_n``.
    urn : Urn
        Multiset of ``n`` points, ``n <= 12``.
    k : int
        Number of leading coordinates, ``1 <= k <= n``.
    cache : PermanentMinorCache, optional
        Shared minor cache for ``weight_matrix(lam, urn)``.

    Returns
    -------
    TupleDistribution
        Law over ``X^k``.
    """
    weights = conditional_weights(lam, urn, k, cache)
    return TupleDistribution.from_weights(k, urn.c, weights)


def weighted_iid_factors(lam: WeightProfile, urn: Urn, k: int) -> np.ndarray:
    """Return the ``(k, c)`` coordinate laws ``lambda_i(v) n_v / sum_u lambda_i(u) n_u``."""
    check_urn_request(lam, urn, k)
    raw = lam.matrix[:k] * np.asarray(urn.counts, dtype=float)
    return raw / raw.sum(axis=1, keepdims=True)


def urn_weighted_iid(lam: WeightProfile, urn: Urn, k: int) -> TupleDistribution:
    """Weighted i.i.d. law on the urn: coordinates drawn independently with replacement.

    Coordinate ``i`` picks slot ``j`` with probability proportional to
    ``lambda_i(x_j)``, which is the weighted i.i.d. component with base
    measure the empirical measure of the urn.
    """
    return TupleDistribution.product(list(weighted_iid_factors(lam, urn, k)))


def urn_coordinate_marginal(lam: WeightProfile, urn: Urn, i: int) -> np.ndarray:
    """One-dimensional law of coordinate ``i`` (1-based) given the urn.

    ``P(X_i = v) = lambda_i(v) n_v perm(M without row i and one v-column) / perm(M)``.
    """
    check_urn_request(lam, urn, 1)
    if not 1 <= i <= urn.n:
        raise ValueError(f"Coordinate i must be in 1..{urn.n}, got {i}.")
    matrix = weight_matrix(lam, urn)
    total = minor_cache(lam, urn).total
    starts = block_starts(urn)
    out = np.zeros(urn.c)
    for v in urn.occupied:
        minor = permanent_minor(matrix, [i - 1], [int(starts[v])])
        out[v] = lam.matrix[i - 1, v] * urn.counts[v] * (minor / total).to_float()
    return out / math.fsum(out)
