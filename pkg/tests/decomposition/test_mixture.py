"""Tests for the extreme-point decomposition."""

import importlib
import types
from math import comb

import numpy as np
import pytest

from exchkit import (
    NotWeightedExchangeableError,
    SizeGuardError,
    TupleDistribution,
    Urn,
    UrnMixture,
    WeightProfile,
    build_Q,
    decompose,
    is_weighted_exchangeable,
    marginal,
    mixture_marginal,
    reconstruct,
    tv_distance,
    urn_conditional,
    urn_weighted_iid,
)
from exchkit.core import DecompositionMismatchError
from tests.dgp import TiltedKernelDGP, UrnMixtureDGP, iid_bernoulli, running_profile


def test_uniform_binary_pair():
    p = TupleDistribution(k=2, c=2, probs=np.full(4, 0.25))
    mix = decompose(p, WeightProfile.constant(2, 2))

    assert mix.urns == [Urn((2, 0)), Urn((1, 1)), Urn((0, 2))]
    np.testing.assert_allclose(mix.weights, [0.25, 0.5, 0.25], rtol=1e-15)


def test_extreme_point_is_a_single_atom():
    lam = WeightProfile(np.array([[1.0, 0.5, 2.0], [1.0, 1.0, 1.0], [3.0, 1.0, 1.0]]))
    urn = Urn((1, 0, 2))
    p = urn_conditional(lam, urn, 3)

    mix = decompose(p, lam)

    assert len(mix) == 1
    assert mix.weight_of(urn) == pytest.approx(1.0)
    np.testing.assert_allclose(reconstruct(mix, lam).probs, p.probs, atol=1e-15)


def test_product_example_round_trip():
    lam = WeightProfile(np.array([[1.0, 2.0], [1.0, 2.0]]))
    p = TupleDistribution(k=2, c=2, probs=np.array([1, 2, 2, 4]) / 9)

    mix = decompose(p, lam)

    np.testing.assert_allclose(mix.weights, [1 / 9, 4 / 9, 4 / 9], rtol=1e-14)
    np.testing.assert_allclose(reconstruct(mix, lam).probs, p.probs, rtol=1e-12)


def test_binomial_urn_weights_give_iid_bernoulli():
    n = 5
    urns = [Urn((n - s, s)) for s in range(n + 1)]
    weights = [comb(n, s) / 2**n for s in range(n + 1)]
    mix = UrnMixture(tuple(zip(urns, weights, strict=True)))

    np.testing.assert_allclose(reconstruct(mix, WeightProfile.constant(n, 2)).probs, iid_bernoulli(n).probs, rtol=1e-12)


@pytest.mark.parametrize("c, n", [(2, 2), (2, 4), (2, 6), (3, 3), (3, 5)])
@pytest.mark.parametrize("seed", range(3))
def test_round_trip_on_tilted_kernels(c, n, seed):
    data = TiltedKernelDGP(c=c, n=n, random_seed=seed).generate_data()
    p, lam = data["p"], data["lam"]

    mix = decompose(p, lam)

    np.testing.assert_allclose(reconstruct(mix, lam).probs, p.probs, rtol=1e-10, atol=1e-14)


@pytest.mark.parametrize("seed", range(4))
def test_decomposition_recovers_mixture_weights(seed):
    rng = np.random.default_rng(seed)
    lam = WeightProfile(np.exp(rng.uniform(-1.5, 0.0, size=(4, 3))))
    data = UrnMixtureDGP(lam, random_seed=seed).generate_data()

    mix = decompose(data["p"], lam)
    again = decompose(reconstruct(mix, lam), lam)

    assert mix.urns == data["mix"].urns
    np.testing.assert_allclose(mix.weights, data["mix"].weights, rtol=1e-10)
    np.testing.assert_allclose(again.weights, mix.weights, rtol=1e-10)


def test_running_instance_approximant():
    lam = running_profile()
    p = urn_conditional(lam, Urn((1, 1)), 2)

    q = build_Q(p, lam)

    np.testing.assert_allclose(q.probs, [1 / 6, 1 / 3, 1 / 6, 1 / 3], rtol=1e-14)
    assert tv_distance(p, q) == pytest.approx(0.5, abs=1e-14)


def test_constant_weights_approximant_draws_from_empirical_measure():
    p = iid_bernoulli(3, prob=0.3)
    lam = WeightProfile.constant(3, 2)
    mix = decompose(p, lam)

    expected = sum(w * urn_weighted_iid(lam, urn, 3).probs for urn, w in mix.atoms)

    np.testing.assert_allclose(build_Q(p, lam, mix).probs, expected, rtol=1e-12)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_marginalization_commutes_with_mixing(k):
    data = TiltedKernelDGP(c=2, n=4, random_seed=12).generate_data()
    p, lam = data["p"], data["lam"]
    mix = decompose(p, lam)

    np.testing.assert_allclose(
        marginal(build_Q(p, lam, mix), k).probs, mixture_marginal(mix, lam, k).probs, rtol=1e-12, atol=1e-15
    )


def test_approximant_components_are_product_laws():
    data = TiltedKernelDGP(c=3, n=3, random_seed=2).generate_data()
    mix = decompose(data["p"], data["lam"])
    for urn in mix.urns:
        law = urn_weighted_iid(data["lam"], urn, 3).as_array()
        outer = np.einsum("i,j,k->ijk", law.sum(axis=(1, 2)), law.sum(axis=(0, 2)), law.sum(axis=(0, 1)))
        np.testing.assert_allclose(law, outer, rtol=1e-12, atol=1e-15)


def test_rejects_non_exchangeable_law():
    with pytest.raises(NotWeightedExchangeableError, match=r"\(1 2\)"):
        decompose(TupleDistribution.point_mass((0, 1), c=2), WeightProfile.constant(2, 2))
    assert not is_weighted_exchangeable(TupleDistribution.point_mass((0, 1), c=2), WeightProfile.constant(2, 2))


def test_flags_conditional_mismatch(monkeypatch):
    lam = WeightProfile(np.array([[1.0, 2.0], [1.0, 1.0]]))
    p = TupleDistribution(k=2, c=2, probs=np.array([0.25, 0.25, 0.5, 0.0]))
    assert is_weighted_exchangeable(p, lam)

    def uniform_law(lam, urn, k):
        return TupleDistribution(k=k, c=urn.c, probs=np.full(urn.c**k, 1.0 / urn.c**k))

    monkeypatch.setattr(importlib.import_module("exchkit.decomposition.mixture"), "urn_conditional", uniform_law)
    with pytest.raises(DecompositionMismatchError, match=r"Urn\(2, 0\)"):
        decompose(p, lam)


def test_guards():
    with pytest.raises(ValueError):
        decompose(TupleDistribution.point_mass((0, 1), c=2), WeightProfile.constant(3, 2))
    with pytest.raises(SizeGuardError):
        decompose(TupleDistribution.point_mass((0,) * 13, c=2), WeightProfile.constant(13, 2))


def test_mixture_validation():
    with pytest.raises(ValueError, match="distinct"):
        UrnMixture(((Urn((1, 1)), 0.5), (Urn((1, 1)), 0.5)))
    with pytest.raises(ValueError, match="sum to 1"):
        UrnMixture(((Urn((1, 1)), 0.5),))
    with pytest.raises(ValueError, match="share"):
        UrnMixture(((Urn((1, 1)), 0.5), (Urn((1, 2)), 0.5)))
    with pytest.raises(ValueError):
        UrnMixture(())


def test_subpackage_not_shadowed_by_function():
    import exchkit
    import exchkit.decomposition as package

    assert isinstance(package, types.ModuleType)
    assert isinstance(importlib.import_module("exchkit.decomposition.mixture"), types.ModuleType)
    assert callable(exchkit.decompose)
    assert exchkit.decompose is package.decompose
