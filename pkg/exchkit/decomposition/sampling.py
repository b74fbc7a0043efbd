"""Exact sampling of weighted exchangeable laws through their urn decomposition."""

import numpy as np

from exchkit.core.models import WeightProfile
from exchkit.extremal import sample_urn_conditional

from .mixture import UrnMixture


def sample_model(
    mix: UrnMixture,
    lam: WeightProfile,
    n_samples: int,
    seed: int | None = None,
) -> np.ndarray:
    """Draw from ``sum_U w_U P_{U,n}``.

    The number of draws per urn is multinomial in the urn weights; each urn
    is then emptied by the sequential sampler on its own child seed and the
    rows are shuffled.

    Parameters
    ----------
    mix : UrnMixture
        Decomposition of the law to sample.
    lam : WeightProfile
        Weight functions ``lambda_1..lambda_n``.
    n_samples : int
        Number of draws.
    seed : int, optional
        Master seed.

    Returns
    -------
    ndarray
        Integer array of shape ``(n_samples, n)``.
    """
    if n_samples < 0:
        raise ValueError(f"n_samples must be nonnegative, got {n_samples}.")
    root = np.random.SeedSequence(seed)
    children = root.spawn(len(mix) + 1)
    rng = np.random.default_rng(children[0])
    per_urn = rng.multinomial(n_samples, mix.weights / mix.weights.sum())
    blocks = [
        sample_urn_conditional(lam, urn, child, int(m))
        for urn, child, m in zip(mix.urns, children[1:], per_urn, strict=True)
        if m > 0
    ]
    draws = np.vstack(blocks) if blocks else np.empty((0, mix.n), dtype=np.int64)
    return draws[rng.permutation(draws.shape[0])]
