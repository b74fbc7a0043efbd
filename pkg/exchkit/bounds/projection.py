"""Best approximation of a tuple law by mixtures of weighted i.i.d. laws over a grid."""

from typing import NamedTuple

import numpy as np
from scipy.optimize import linprog

from exchkit.core.constants import LP_TOL, LPSolver
from exchkit.core.distances import tv_distance
from exchkit.core.models import TupleDistribution, Urn, WeightProfile
from exchkit.utils import weak_compositions

from .simplex import simplex_minimize


class ProjectionResult(NamedTuple):
    """Result of :func:`lp_project`.

    Attributes
    ----------
    value : float
        Total variation distance from the law to the optimal mixture.
    mixture_weights : ndarray
        Optimal weight of every grid atom.
    grid : ndarray
        The ``(M, c)`` base measures.
    solver : str
        Backend that produced the solution.
    """

    value: float
    mixture_weights: np.ndarray
    grid: np.ndarray
    solver: str


def simplex_grid(c: int, resolution: int) -> np.ndarray:
    """All probability vectors on ``c`` points with entries in ``{0, 1/resolution, ..., 1}``."""
    if c < 1 or resolution < 1:
        raise ValueError(f"c and resolution must be positive, got c={c}, resolution={resolution}.")
    return np.array(weak_compositions(resolution, c), dtype=float) / resolution


def projection_grid(c: int, resolution: int, urns: list[Urn] | None = None) -> np.ndarray:
    """Uniform simplex grid joined with the empirical measures of ``urns``, without duplicates."""
    parts = [simplex_grid(c, resolution)]
    if urns:
        parts.append(np.vstack([urn.empirical for urn in urns]))
    return np.unique(np.vstack(parts), axis=0)


def weighted_iid_law(lam: WeightProfile, base: np.ndarray, k: int) -> np.ndarray:
    """Probabilities over ``X^k`` of independent coordinates ``i`` with law ``lambda_i F / <lambda_i, F>``."""
    factors = lam.matrix[:k] * base
    factors = factors / factors.sum(axis=1, keepdims=True)
    out = np.ones(1)
    for row in factors:
        out = np.multiply.outer(out, row).reshape(-1)
    return out


def lp_project(
    p_k: TupleDistribution,
    lam: WeightProfile,
    grid: np.ndarray,
    solver: LPSolver | str = LPSolver.SIMPLEX,
) -> ProjectionResult:
    r"""Minimize the total variation distance from ``p_k`` to mixtures over a grid of base measures.

    With ``A[z, m]`` the weighted i.i.d. law of base measure ``F_m``, solves

    .. math::

        \min_{w, e} \tfrac12 \sum_z e_z \quad \text{s.t.} \quad
        e_z \ge \pm\Big(\sum_m A_{zm} w_m - P_k(z)\Big), \quad
        \sum_m w_m = 1, \quad w, e \ge 0.

    Parameters
    ----------
    p_k : TupleDistribution
        Law over ``X^k``.
    lam : WeightProfile
        Weight functions; the first ``k`` are used.
    grid : ndarray
        ``(M, c)`` array of probability vectors.
    solver : LPSolver or str, default "simplex"
        ``"simplex"`` for the bundled tableau method, ``"highs"`` for
        :func:`scipy.optimize.linprog`.

    Returns
    -------
    ProjectionResult
        Distance to the optimal mixture and its weights.
    """
    solver = LPSolver(solver)
    grid = np.atleast_2d(np.asarray(grid, dtype=float))
    if grid.size == 0:
        raise ValueError("Grid must contain at least one base measure.")
    if grid.shape[1] != p_k.c or lam.c != p_k.c:
        raise ValueError(f"Grid atoms and weights must live on {p_k.c} points.")
    if lam.n < p_k.k:
        raise ValueError(f"Need at least {p_k.k} weight functions, got {lam.n}.")
    if np.any(grid < 0) or np.any(np.abs(grid.sum(axis=1) - 1.0) > 1e-10):
        raise ValueError("Grid atoms must be probability vectors.")

    A = np.column_stack([weighted_iid_law(lam, base, p_k.k) for base in grid])
    n_cells, n_atoms = A.shape
    eye = np.eye(n_cells)
    cost = np.concatenate([np.zeros(n_atoms), np.full(n_cells, 0.5)])
    A_ub = np.block([[A, -eye], [-A, -eye]])
    b_ub = np.concatenate([p_k.probs, -p_k.probs])
    A_eq = np.concatenate([np.ones(n_atoms), np.zeros(n_cells)])[np.newaxis, :]
    b_eq = np.array([1.0])

    if solver is LPSolver.HIGHS:
        res = linprog(cost, A_ub=A_ub, b_ub=b_ub, A_eq=A_eq, b_eq=b_eq, bounds=(0, None), method="highs")
        assert res.status == 0, f"LP over a nonempty simplex must be solvable: {res.message}"
        x = np.asarray(res.x)
    else:
        res = simplex_minimize(cost, A_ub=A_ub, b_ub=b_ub, A_eq=A_eq, b_eq=b_eq, tol=LP_TOL * 1e-1)
        assert res.status == "optimal", f"LP over a nonempty simplex must be solvable: {res.status}"
        x = res.x

    weights = np.clip(x[:n_atoms], 0.0, None)
    weights = weights / weights.sum()
    mixture = TupleDistribution.from_weights(p_k.k, p_k.c, A @ weights)
    return ProjectionResult(
        value=tv_distance(p_k, mixture),
        mixture_weights=weights,
        grid=grid,
        solver=solver.value,
    )
