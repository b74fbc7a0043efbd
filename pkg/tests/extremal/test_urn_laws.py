"""Tests for urn-conditional and weighted i.i.d. urn laws."""

import math

import numpy as np
import pytest

from exchkit import (
    SizeGuardError,
    Urn,
    WeightProfile,
    marginal,
    urn_conditional,
    urn_coordinate_marginal,
    urn_weighted_iid,
    weak_compositions,
)
from exchkit.extremal import distinct_support, minor_cache
from tests.dgp import running_profile


def _random_profile(seed, n, c, r_min=0.2):
    rng = np.random.default_rng(seed)
    return WeightProfile(np.exp(rng.uniform(np.log(r_min), 0.0, size=(n, c))))


def test_constant_weights_give_sampling_without_replacement():
    p = urn_conditional(WeightProfile.constant(2, 2), Urn((1, 1)), 2)
    np.testing.assert_allclose(p.probs, [0.0, 0.5, 0.5, 0.0], atol=1e-15)


def test_running_instance_urn_conditional():
    lam = running_profile()
    urn = Urn((1, 1))

    p2 = urn_conditional(lam, urn, 2)
    p1 = urn_conditional(lam, urn, 1)

    np.testing.assert_allclose(p2.probs, [0.0, 2 / 3, 1 / 3, 0.0], atol=1e-15)
    np.testing.assert_allclose(p1.probs, [2 / 3, 1 / 3], rtol=1e-14)
    assert minor_cache(lam, urn).total.to_float() == 3.0


def test_running_instance_weighted_iid():
    lam = running_profile()
    urn = Urn((1, 1))

    np.testing.assert_allclose(urn_weighted_iid(lam, urn, 2).probs, [1 / 6, 1 / 3, 1 / 6, 1 / 3], rtol=1e-14)
    np.testing.assert_allclose(urn_weighted_iid(lam, urn, 1).probs, [0.5, 0.5], rtol=1e-15)
    np.testing.assert_allclose(urn_weighted_iid(WeightProfile.constant(2, 2), urn, 2).probs, [0.25] * 4)


@pytest.mark.parametrize("counts", [(3, 0, 1), (2, 2, 0), (1, 1, 2)])
def test_constant_weights_match_hypergeometric_law(counts):
    urn = Urn(counts)
    n = urn.n
    for k in range(1, n + 1):
        p = urn_conditional(WeightProfile.constant(n, 3), urn, k)
        for index in np.flatnonzero(distinct_support(urn, k)):
            z = np.unravel_index(index, (3,) * k)
            nu = np.bincount(np.asarray(z, dtype=int), minlength=3)
            expected = math.prod(math.perm(counts[v], nu[v]) for v in range(3)) / math.perm(n, k)
            assert p.probs[index] == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize("n, c", [(3, 2), (4, 3), (6, 2), (7, 2), (5, 3)])
def test_marginal_consistency(n, c):
    lam = _random_profile(n * 10 + c, n, c)
    for counts in weak_compositions(n, c)[:: max(1, len(weak_compositions(n, c)) // 6)]:
        urn = Urn(counts)
        cache = minor_cache(lam, urn)
        full = urn_conditional(lam, urn, n, cache)
        for k in range(1, n):
            np.testing.assert_allclose(
                urn_conditional(lam, urn, k, cache).probs, marginal(full, k).probs, rtol=1e-10, atol=1e-13
            )


@pytest.mark.parametrize("i", range(1, 6))
def test_coordinate_marginal_matches_full_law(i):
    lam = _random_profile(5, 5, 3)
    urn = Urn((2, 1, 2))
    full = urn_conditional(lam, urn, 5).as_array()

    expected = full.sum(axis=tuple(ax for ax in range(5) if ax != i - 1))

    np.testing.assert_allclose(urn_coordinate_marginal(lam, urn, i), expected, rtol=1e-10, atol=1e-14)


def test_single_value_urn_is_a_point_mass():
    lam = _random_profile(1, 4, 2)
    p = urn_conditional(lam, Urn((0, 4)), 3)
    assert p[(1, 1, 1)] == 1.0


def test_guards():
    lam = running_profile()
    with pytest.raises(ValueError):
        urn_conditional(lam, Urn((1, 1)), 3)
    with pytest.raises(ValueError):
        urn_conditional(lam, Urn((2, 1)), 1)
    with pytest.raises(ValueError):
        urn_conditional(lam, Urn((1, 0, 1)), 1)
    with pytest.raises(SizeGuardError):
        urn_conditional(WeightProfile.constant(13, 2), Urn((6, 7)), 1)
    with pytest.raises(ValueError):
        urn_coordinate_marginal(lam, Urn((1, 1)), 3)
