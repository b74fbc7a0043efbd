"""Tests for exact sampling through the urn decomposition."""

import numpy as np
import pytest

from exchkit import TupleDistribution, UrnMixture, random_instance, sample_model, tv_distance
from exchkit.core import Urn
from tests.dgp import running_profile


def _empirical(draws, c):
    n = draws.shape[1]
    codes = draws @ (c ** np.arange(n - 1, -1, -1))
    return TupleDistribution(k=n, c=c, probs=np.bincount(codes, minlength=c**n) / draws.shape[0])


def test_shape_and_dtype():
    inst = random_instance(seed=4, c=3, n=4, r_min=0.5)

    draws = sample_model(inst.mixture, inst.lam, n_samples=300, seed=1)

    assert draws.shape == (300, 4)
    assert np.issubdtype(draws.dtype, np.integer)
    assert draws.min() >= 0
    assert draws.max() < 3


def test_seed_determinism():
    inst = random_instance(seed=9, c=2, n=5, r_min=0.4)

    a = sample_model(inst.mixture, inst.lam, n_samples=200, seed=17)
    b = sample_model(inst.mixture, inst.lam, n_samples=200, seed=17)
    c = sample_model(inst.mixture, inst.lam, n_samples=200, seed=18)

    np.testing.assert_array_equal(a, b)
    assert not np.array_equal(a, c)


def test_zero_samples():
    inst = random_instance(seed=1, c=2, n=3, r_min=1.0)

    draws = sample_model(inst.mixture, inst.lam, n_samples=0, seed=0)

    assert draws.shape == (0, 3)


def test_negative_samples_rejected():
    inst = random_instance(seed=1, c=2, n=3, r_min=1.0)
    with pytest.raises(ValueError, match="nonnegative"):
        sample_model(inst.mixture, inst.lam, n_samples=-1, seed=0)


def test_single_urn_mixture_keeps_counts():
    lam = running_profile()
    mix = UrnMixture(((Urn((1, 1)), 1.0),))

    draws = sample_model(mix, lam, n_samples=1000, seed=2)

    assert np.all(draws.sum(axis=1) == 1)


@pytest.mark.parametrize("seed,c,n", [(3, 2, 4), (5, 3, 3), (8, 2, 5)])
def test_empirical_law_close_to_model(seed, c, n):
    inst = random_instance(seed=seed, c=c, n=n, r_min=0.5)

    draws = sample_model(inst.mixture, inst.lam, n_samples=100_000, seed=seed)

    assert tv_distance(_empirical(draws, c), inst.model) <= 0.02
