"""Exact sequential sampler for urn-conditional laws."""

import numpy as np

from exchkit.core.models import Urn, WeightProfile

from .urn_laws import block_starts, check_urn_request, minor_cache


def sample_urn_conditional(
    lam: WeightProfile,
    urn: Urn,
    seed: int | np.random.SeedSequence | None,
    n_samples: int,
) -> np.ndarray:
    """Draw exact orderings of an urn from its urn-conditional law.

    Coordinate ``i`` takes value ``v`` with probability
    ``lambda_i(v) * rem_v * perm(M') / perm(M_i)``, where ``M_i`` keeps rows
    ``i..n`` and the unused slots and ``M'`` further removes row ``i`` and one
    unused ``v``-slot. Draws sharing a partial state share one probability
    vector, so each of the ``n`` steps is vectorized across draws.

    Parameters
    ----------
    lam : WeightProfile
        Weight functions ``lambda_1..lambda_n``.
    urn : Urn
        Multiset of ``n <= 12`` points.
    seed : int, SeedSequence or None
        Seed for ``numpy.random.default_rng``.
    n_samples : int
        Number of draws.

    Returns
    -------
    ndarray
        Integer array of shape ``(n_samples, n)``; row ``s`` is one ordering.
    """
    check_urn_request(lam, urn, urn.n)
    if n_samples < 0:
        raise ValueError(f"n_samples must be nonnegative, got {n_samples}.")
    rng = np.random.default_rng(seed)
    n, c = urn.n, urn.c
    counts = np.asarray(urn.counts, dtype=np.int64)
    starts = block_starts(urn)
    cache = minor_cache(lam, urn)
    step_memo: dict[tuple[int, int], np.ndarray] = {}

    def step_cdf(t: int, mask: int, taken: np.ndarray) -> np.ndarray:
        key = (t, mask)
        if key in step_memo:
            return step_memo[key]
        denom = cache(mask)
        probs = np.zeros(c)
        for v in range(c):
            remaining = counts[v] - taken[v]
            if remaining > 0:
                child = mask | (1 << int(starts[v] + taken[v]))
                probs[v] = lam.matrix[t, v] * remaining * (cache(child) / denom).to_float()
        cdf = np.cumsum(probs / probs.sum())
        cdf[np.flatnonzero(probs)[-1] :] = 1.0
        step_memo[key] = cdf
        return cdf

    draws = np.empty((n_samples, n), dtype=np.int64)
    masks = np.zeros(n_samples, dtype=np.int64)
    used = np.zeros((n_samples, c), dtype=np.int64)
    rows = np.arange(n_samples)
    for t in range(n):
        u = rng.random(n_samples)
        states, first, inverse = np.unique(masks, return_index=True, return_inverse=True)
        inverse = inverse.reshape(-1)
        choice = np.empty(n_samples, dtype=np.int64)
        for s, mask in enumerate(states):
            members = inverse == s
            cdf = step_cdf(t, int(mask), used[first[s]])
            choice[members] = np.searchsorted(cdf, u[members], side="right")
        draws[:, t] = choice
        slot = starts[choice] + used[rows, choice]
        masks |= np.left_shift(np.int64(1), slot)
        used[rows, choice] += 1
    return draws
