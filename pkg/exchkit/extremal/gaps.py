"""Total variation gaps between urn-conditional and weighted i.i.d. laws."""

import math
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from exchkit.core.constants import DEFAULT_ATOL, DEFAULT_RTOL
from exchkit.core.distances import tv_distance
from exchkit.core.models import TupleDistribution, Urn, WeightProfile
from exchkit.permanent import PermanentMinorCache
from exchkit.utils import falling_factorial, tuple_type_counts

from .urn_laws import (
    arrangement_counts,
    conditional_weights,
    distinct_support,
    urn_conditional,
    urn_weighted_iid,
    weighted_iid_factors,
)


class UrnGap(NamedTuple):
    """Distance between the urn-conditional law and its weighted i.i.d. counterpart.

    Attributes
    ----------
    tv_exact : float
        ``tv_distance(P_{U,k}, Q_{U,k})`` over value tuples.
    one_minus_q_support : float
        Probability that the with-replacement draw repeats an urn slot.
    bound_rhs : float
        ``(prod_{i<=k} r_i)^{-1} (1 - (n)_k / n^k)``.
    tv_slots : float
        Distance between the two laws over slot tuples, before equal values
        are merged. Always ``tv_exact <= tv_slots``.
    domination_excess : float
        Total mass by which the with-replacement law exceeds the
        without-replacement law on distinct slot tuples, so that
        ``tv_slots = one_minus_q_support + domination_excess``.
    dominated : bool
        Whether the with-replacement law is pointwise below the
        without-replacement law on distinct slot tuples.
    """

    tv_exact: float
    one_minus_q_support: float
    bound_rhs: float
    tv_slots: float
    domination_excess: float
    dominated: bool


def _slot_level_terms(
    lam: WeightProfile,
    urn: Urn,
    k: int,
    p_values: np.ndarray,
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Per value tuple: support mask, arrangement count, and per-slot-tuple masses of P and Q."""
    feasible = distinct_support(urn, k)
    arrangements = arrangement_counts(urn, k)
    p_slot = np.zeros_like(p_values)
    p_slot[feasible] = p_values[feasible] / arrangements[feasible]
    # with replacement, every slot tuple of value z has mass prod_i lambda_i(z_i) / S_i
    q_rows = lam.matrix[:k] / (lam.matrix[:k] @ np.asarray(urn.counts, dtype=float))[:, np.newaxis]
    q_slot = np.ones(1)
    for row in q_rows:
        q_slot = np.multiply.outer(q_slot, row).reshape(-1)
    return feasible, arrangements, p_slot, q_slot


def gap_bound_rhs(lam: WeightProfile, n: int, k: int) -> float:
    """Return ``(prod_{i<=k} r_i)^{-1} (1 - (n)_k / n^k)``."""
    return (1.0 - falling_factorial(n, k) / n**k) / lam.prod_ratios(k)


def tv_urn_gap(
    lam: WeightProfile,
    urn: Urn,
    k: int,
    cache: PermanentMinorCache | None = None,
    tol: float = DEFAULT_ATOL,
) -> UrnGap:
    """Compare sampling the urn without replacement to sampling it with replacement.

    Parameters
    ----------
    lam : WeightProfile
        Weight functions ``lambda_1..lambda_n``.
    urn : Urn
        Multiset of ``n <= 12`` points.
    k : int
        Number of leading coordinates.
    cache : PermanentMinorCache, optional
        Shared minor cache for the urn's weight matrix.
    tol : float, default 1e-10
        Absolute slack for the domination verdict.

    Returns
    -------
    UrnGap
        Exact distance, the repeated-slot mass, the analytic bound and the
        slot-level domination diagnostics.
    """
    p_values = conditional_weights(lam, urn, k, cache)
    p = TupleDistribution.from_weights(k, urn.c, p_values)
    q = urn_weighted_iid(lam, urn, k)
    feasible, arrangements, p_slot, q_slot = _slot_level_terms(lam, urn, k, p.probs)

    q_distinct = math.fsum(arrangements[feasible] * q_slot[feasible])
    one_minus_q_support = min(max(1.0 - q_distinct, 0.0), 1.0)
    excess = np.clip(q_slot[feasible] - p_slot[feasible], 0.0, None)
    domination_excess = math.fsum(arrangements[feasible] * excess)
    return UrnGap(
        tv_exact=tv_distance(p, q),
        one_minus_q_support=one_minus_q_support,
        bound_rhs=gap_bound_rhs(lam, urn.n, k),
        tv_slots=min(one_minus_q_support + domination_excess, 1.0),
        domination_excess=domination_excess,
        dominated=bool(domination_excess <= tol),
    )


def domination_check(
    lam: WeightProfile,
    urn: Urn,
    k: int,
    cache: PermanentMinorCache | None = None,
    tol: float = DEFAULT_ATOL,
) -> tuple[bool, float]:
    """Check ``Q(j) <= P(j)`` for every distinct slot tuple ``j``.

    Returns
    -------
    tuple of (bool, float)
        The verdict and the largest pointwise excess ``max_j (Q(j) - P(j))^+``.
    """
    p_values = conditional_weights(lam, urn, k, cache)
    feasible, _, p_slot, q_slot = _slot_level_terms(lam, urn, k, p_values)
    max_excess = float(np.max(np.clip(q_slot[feasible] - p_slot[feasible], 0.0, None), initial=0.0))
    return max_excess <= tol, max_excess


@lru_cache(maxsize=4096)
def _reference_laws(urn: Urn, k: int) -> tuple[np.ndarray, np.ndarray]:
    """Value-level laws of uniform sampling without and with replacement from the urn."""
    flat = WeightProfile.constant(urn.n, urn.c)
    p_o = conditional_weights(flat, urn, k)
    p_o = p_o / math.fsum(p_o)
    q_o = TupleDistribution.product(list(weighted_iid_factors(flat, urn, k))).probs
    p_o.setflags(write=False)
    return p_o, q_o


def sampling_ratio_check(
    lam: WeightProfile,
    urn: Urn,
    k: int,
    cache: PermanentMinorCache | None = None,
    rtol: float = DEFAULT_RTOL,
) -> bool:
    r"""Check the ratio comparison between weighted and uniform urn sampling.

    For every value tuple ``z`` with ``P_{U,k}(z) > 0``,

    .. math::

        \frac{Q_{U,k}(z)}{P_{U,k}(z)} - 1 \ge \Big(\prod_{i=1}^n r_i\Big)^{-1}
            \Big(\frac{Q_{o,k}(z)}{P_{o,k}(z)} - 1\Big),

    where ``P_o`` and ``Q_o`` sample the same urn uniformly without and with
    replacement.

    Parameters
    ----------
    lam : WeightProfile
        Weight functions ``lambda_1..lambda_n``.
    urn : Urn
        Multiset of ``n <= 12`` points.
    k : int
        Number of leading coordinates.
    cache : PermanentMinorCache, optional
        Shared minor cache for the urn's weight matrix.
    rtol : float, default 1e-8
        Relative slack on the comparison.

    Returns
    -------
    bool
        True when the inequality holds on the whole support.
    """
    p = urn_conditional(lam, urn, k, cache).probs
    q = urn_weighted_iid(lam, urn, k).probs
    p_o, q_o = _reference_laws(urn, k)
    support = p > 0
    lhs = q[support] / p[support] - 1.0
    rhs = (q_o[support] / p_o[support] - 1.0) / lam.prod_ratios(lam.n)
    slack = rtol * np.maximum(1.0, np.maximum(np.abs(lhs), np.abs(rhs)))
    return bool(np.all(lhs >= rhs - slack))


def uniform_ratio_lemma_check(urn: Urn, k: int, rtol: float = DEFAULT_RTOL) -> bool:
    r"""Check ``Q_{o,k}(z) >= \prod_j (1 - \nu_j / n_j) P_{o,k}(z)`` on the support of ``P_o``.

    ``nu_j`` counts the occurrences of value ``j`` in ``z`` and ``n_j`` its
    multiplicity in the urn.
    """
    p_o, q_o = _reference_laws(urn, k)
    feasible = distinct_support(urn, k)
    types = tuple_type_counts(urn.c, k)[feasible]
    counts = np.asarray(urn.counts, dtype=float)
    occupied = counts > 0
    shrink = np.prod(1.0 - types[:, occupied] / counts[occupied], axis=1)
    lhs = q_o[feasible]
    rhs = shrink * p_o[feasible]
    return bool(np.all(lhs >= rhs - rtol * np.maximum(lhs, rhs) - DEFAULT_ATOL))


def kn_identity_check(urn: Urn, k: int, rtol: float = DEFAULT_RTOL) -> bool:
    """Check ``sum_z (nu_j(z) / n_j) P_{o,k}(z) = k / n`` for every occupied value ``j``."""
    p_o, _ = _reference_laws(urn, k)
    types = tuple_type_counts(urn.c, k)
    target = k / urn.n
    for j in urn.occupied:
        value = math.fsum(p_o * types[:, j]) / urn.counts[j]
        if abs(value - target) > rtol * target:
            return False
    return True
