"""Tests for weighted exchangeability construction and testing."""

import numpy as np
import pytest

from exchkit import (
    SymmetricKernel,
    TupleDistribution,
    WeightProfile,
    build_model,
    detilt,
    find_symmetry_violation,
    is_weighted_exchangeable,
    marginal,
    mix,
    rescale_weights,
)
from tests.dgp import TiltedKernelDGP


def test_build_model_direct_product():
    lam = WeightProfile(np.array([[1.0, 2.0], [1.0, 2.0]]))
    p = build_model(lam, SymmetricKernel.constant(2, 2))

    np.testing.assert_allclose(p.probs, np.array([1, 2, 2, 4]) / 9, rtol=1e-15)


def test_build_model_constant_weights_normalizes_kernel():
    g = SymmetricKernel.from_type_function(3, 2, {(3, 0): 1.0, (2, 1): 2.0, (1, 2): 3.0, (0, 3): 4.0})
    p = build_model(WeightProfile.constant(3, 2), g)

    np.testing.assert_allclose(p.probs, g.values / g.values.sum(), rtol=1e-15)


def test_product_example_is_exchangeable_for_both_weightings():
    # f(x1, x2) = x1 x2 on {1, 2}, coded as {0, 1}
    f = TupleDistribution(k=2, c=2, probs=np.array([1, 2, 2, 4]) / 9)

    assert is_weighted_exchangeable(f, WeightProfile.constant(2, 2))
    assert is_weighted_exchangeable(f, WeightProfile(np.array([[1.0, 2.0], [1.0, 2.0]])))


def test_point_mass_is_not_exchangeable():
    f = TupleDistribution.point_mass((0, 1), c=2)
    lam = WeightProfile.constant(2, 2)

    assert not is_weighted_exchangeable(f, lam)
    violation = find_symmetry_violation(f, lam)
    assert (violation.i, violation.j) == (1, 2)
    assert {violation.value, violation.swapped_value} == {0.0, 1.0}


def test_find_symmetry_violation_names_later_transposition():
    # symmetric in the first two coordinates, not in the last two
    probs = np.zeros(8)
    probs[0b001] = 0.5
    probs[0b000] = 0.5
    f = TupleDistribution(k=3, c=2, probs=probs)

    violation = find_symmetry_violation(f, WeightProfile.constant(3, 2))

    assert (violation.i, violation.j) == (1, 3)
    assert violation.point == (0, 0, 1)


def test_detilt_recovers_kernel():
    dgp = TiltedKernelDGP(c=3, n=3, random_seed=7)
    data = dgp.generate_data()

    h = detilt(data["p"], data["lam"])

    np.testing.assert_allclose(h.probs, data["g"].values / data["g"].values.sum(), rtol=1e-12)


def test_shape_mismatch():
    f = TupleDistribution.point_mass((0, 1), c=2)
    with pytest.raises(ValueError):
        is_weighted_exchangeable(f, WeightProfile.constant(3, 2))
    with pytest.raises(ValueError):
        build_model(WeightProfile.constant(3, 2), SymmetricKernel.constant(2, 2))


@pytest.mark.parametrize("seed", range(5))
def test_build_model_is_weighted_exchangeable(seed):
    data = TiltedKernelDGP(c=2 + seed % 2, n=4, random_seed=seed).generate_data()
    assert is_weighted_exchangeable(data["p"], data["lam"], tol=1e-10)


@pytest.mark.parametrize("seed", range(5))
def test_mixtures_stay_weighted_exchangeable(seed):
    rng = np.random.default_rng(seed)
    lam = WeightProfile(np.exp(rng.uniform(-1.0, 0.0, size=(3, 2))))
    kernels = [
        SymmetricKernel.from_type_function(3, 2, {t: rng.uniform(0.1, 2.0) for t in [(3, 0), (2, 1), (1, 2), (0, 3)]})
        for _ in range(2)
    ]
    f, f_prime = (build_model(lam, g) for g in kernels)
    alpha = rng.uniform()

    assert is_weighted_exchangeable(mix([f, f_prime], [alpha, 1 - alpha]), lam)


@pytest.mark.parametrize("seed", range(4))
def test_marginal_is_weighted_exchangeable_for_leading_weights(seed):
    data = TiltedKernelDGP(c=2, n=4, random_seed=seed).generate_data()
    lam = data["lam"]
    for k in range(1, 5):
        assert is_weighted_exchangeable(marginal(data["p"], k), lam.head(k))


def test_marginal():
    p = TupleDistribution(k=2, c=2, probs=np.array([1, 2, 2, 4]) / 9)

    np.testing.assert_allclose(marginal(p, 1).probs, [1 / 3, 2 / 3])
    assert marginal(p, 2) is p

    product = TupleDistribution.product([np.array([0.2, 0.8]), np.array([0.6, 0.4]), np.array([0.5, 0.5])])
    np.testing.assert_allclose(marginal(product, 2).probs, np.outer([0.2, 0.8], [0.6, 0.4]).reshape(-1))

    with pytest.raises(ValueError):
        marginal(p, 3)


@pytest.mark.parametrize("theta", [(2.0, 0.5), (1.0, 1.0), (3.0, 1 / 3)])
def test_rescale_weights_preserves_verdicts_and_ratios(theta):
    lam = WeightProfile(np.array([[1.0, 2.0], [1.0, 2.0]]))
    rescaled = rescale_weights(lam, theta)

    np.testing.assert_allclose(rescaled.ratios, lam.ratios, rtol=1e-15)
    symmetric = TupleDistribution(k=2, c=2, probs=np.array([1, 2, 2, 4]) / 9)
    asymmetric = TupleDistribution(k=2, c=2, probs=np.array([1, 1, 3, 4]) / 9)
    for f in (symmetric, asymmetric):
        assert is_weighted_exchangeable(f, rescaled) == is_weighted_exchangeable(f, lam)
    if theta == (1.0, 1.0):
        np.testing.assert_array_equal(rescaled.matrix, lam.matrix)


def test_rescale_weights_requires_unit_product():
    with pytest.raises(ValueError, match="multiply to 1"):
        rescale_weights(WeightProfile.constant(2, 2), [2.0, 2.0])
    with pytest.raises(ValueError):
        rescale_weights(WeightProfile.constant(2, 2), [1.0])


def test_mix_validation():
    p = TupleDistribution.point_mass((0,), c=2)
    q = TupleDistribution.point_mass((1,), c=2)

    np.testing.assert_allclose(mix([p, q], [0.25, 0.75]).probs, [0.25, 0.75])
    with pytest.raises(ValueError):
        mix([p, q], [0.5, 0.6])
    with pytest.raises(ValueError):
        mix([p, TupleDistribution.point_mass((0, 0), c=2)], [0.5, 0.5])
    with pytest.raises(ValueError):
        mix([], [])
