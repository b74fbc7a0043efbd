"""Tests for the mixture projection."""

import numpy as np
import pytest

from exchkit import (
    LPSolver,
    TupleDistribution,
    Urn,
    WeightProfile,
    lp_project,
    marginal,
    mixture_marginal,
    projection_grid,
    random_instance,
    simplex_grid,
    tv_distance,
    urn_conditional,
)
from exchkit.bounds import weighted_iid_law
from tests.dgp import running_profile


def test_simplex_grid_size_and_rows():
    grid = simplex_grid(2, 100)
    assert grid.shape == (101, 2)
    np.testing.assert_allclose(grid.sum(axis=1), 1.0)

    assert simplex_grid(3, 4).shape == (15, 3)
    assert simplex_grid(1, 5).shape == (1, 1)


def test_projection_grid_adds_urn_measures_once():
    grid = projection_grid(3, 2, [Urn((1, 1, 1)), Urn((2, 0, 0)), Urn((1, 0, 2))])

    assert grid.shape[0] == simplex_grid(3, 2).shape[0] + 2
    assert any(np.allclose(row, [1 / 3, 1 / 3, 1 / 3]) for row in grid)
    assert len(np.unique(grid, axis=0)) == grid.shape[0]


def test_weighted_iid_law_constant_weights():
    law = weighted_iid_law(WeightProfile.constant(2, 2), np.array([0.25, 0.75]), 2)
    np.testing.assert_allclose(law, [1 / 16, 3 / 16, 3 / 16, 9 / 16])


def test_weighted_iid_law_tilts_each_coordinate():
    law = weighted_iid_law(running_profile(), np.array([0.5, 0.5]), 2)
    np.testing.assert_allclose(law, [1 / 6, 1 / 3, 1 / 6, 1 / 3])


@pytest.mark.parametrize("solver", ["simplex", "highs"])
def test_zero_when_law_is_on_the_grid(solver):
    lam = WeightProfile(np.array([[1.0, 0.5, 0.8], [0.6, 1.0, 1.0]]))
    grid = simplex_grid(3, 4)
    weights = 0.3 * weighted_iid_law(lam, grid[3], 2) + 0.7 * weighted_iid_law(lam, grid[9], 2)
    p_k = TupleDistribution.from_weights(2, 3, weights)

    result = lp_project(p_k, lam, grid, solver)

    assert result.value == pytest.approx(0.0, abs=1e-8)
    assert result.mixture_weights.sum() == pytest.approx(1.0)
    assert result.solver == solver


@pytest.mark.parametrize("seed", range(20))
def test_no_worse_than_constructed_mixture(seed):
    inst = random_instance(seed=seed, c=2, n=4, r_min=0.5)
    k = 2
    grid = projection_grid(2, 10, inst.mixture.urns)
    p_k = marginal(inst.model, k)

    result = lp_project(p_k, inst.lam, grid)

    constructed = tv_distance(p_k, mixture_marginal(inst.mixture, inst.lam, k))
    assert result.value <= constructed + 1e-8


@pytest.mark.parametrize("seed", range(5))
def test_solvers_agree(seed):
    inst = random_instance(seed=seed, c=3, n=3, r_min=0.3)
    p_k = marginal(inst.model, 2)
    grid = projection_grid(3, 5, inst.mixture.urns)

    ours = lp_project(p_k, inst.lam, grid, LPSolver.SIMPLEX)
    ref = lp_project(p_k, inst.lam, grid, LPSolver.HIGHS)

    assert ours.value == pytest.approx(ref.value, abs=1e-7)


def test_running_extreme_point_fine_grid():
    lam = running_profile()
    p = urn_conditional(lam, Urn((1, 1)), 2)

    result = lp_project(p, lam, simplex_grid(2, 100))

    assert 0.0 < result.value <= 0.5
    assert result.grid.shape == (101, 2)


@pytest.mark.parametrize(
    "grid,match",
    [
        (np.empty((0, 2)), "at least one"),
        (np.array([[0.5, 0.5, 0.0]]), "live on"),
        (np.array([[0.7, 0.7]]), "probability vectors"),
    ],
)
def test_invalid_grid(grid, match):
    p = TupleDistribution.point_mass((0, 1), 2)
    with pytest.raises(ValueError, match=match):
        lp_project(p, WeightProfile.constant(2, 2), grid)


def test_unknown_solver():
    p = TupleDistribution.point_mass((0,), 2)
    with pytest.raises(ValueError):
        lp_project(p, WeightProfile.constant(1, 2), simplex_grid(2, 2), "interior")
