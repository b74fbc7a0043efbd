"""Dense two-phase tableau simplex with Bland's anti-cycling rule."""

from typing import NamedTuple

import numpy as np


class SimplexResult(NamedTuple):
    """Outcome of :func:`simplex_minimize`.

    Attributes
    ----------
    x : ndarray
        Optimal point (zeros when not optimal).
    fun : float
        Objective value at ``x``.
    status : str
        ``"optimal"``, ``"infeasible"``, ``"unbounded"`` or ``"iteration_limit"``.
    nit : int
        Total number of pivots over both phases.
    """

    x: np.ndarray
    fun: float
    status: str
    nit: int


def _pivot(tableau: np.ndarray, row: int, col: int) -> None:
    tableau[row] /= tableau[row, col]
    factors = tableau[:, col].copy()
    factors[row] = 0.0
    tableau -= np.outer(factors, tableau[row])


def _run_phase(
    tableau: np.ndarray,
    basis: list[int],
    n_enter: int,
    tol: float,
    max_iter: int,
) -> tuple[str, int]:
    """Pivot until no reduced cost among the first ``n_enter`` columns is negative."""
    nit = 0
    while nit < max_iter:
        reduced = tableau[-1, :n_enter]
        candidates = np.flatnonzero(reduced < -tol)
        if candidates.size == 0:
            return "optimal", nit
        col = int(candidates[0])
        column = tableau[:-1, col]
        positive = np.flatnonzero(column > tol)
        if positive.size == 0:
            return "unbounded", nit
        ratios = tableau[positive, -1] / column[positive]
        best = ratios.min()
        tied = positive[ratios <= best + tol * max(1.0, abs(best))]
        row = int(min(tied, key=lambda r: basis[r]))
        _pivot(tableau, row, col)
        basis[row] = col
        nit += 1
    return "iteration_limit", nit


def simplex_minimize(
    c: np.ndarray,
    A_ub: np.ndarray | None = None,
    b_ub: np.ndarray | None = None,
    A_eq: np.ndarray | None = None,
    b_eq: np.ndarray | None = None,
    tol: float = 1e-9,
    max_iter: int = 100_000,
) -> SimplexResult:
    r"""Solve :math:`\min c^\top x` subject to ``A_ub x <= b_ub``, ``A_eq x = b_eq``, ``x >= 0``.

    Inequalities get slack columns, rows with a negative right-hand side are
    negated, and every row gets an artificial column. Phase one minimizes the
    sum of artificials; phase two optimizes ``c`` over the original and slack
    columns. Both phases choose the entering column and break ratio-test
    ties by lowest index (Bland's rule), so the method cannot cycle.

    Parameters
    ----------
    c : ndarray
        Objective coefficients, length ``n``.
    A_ub, b_ub : ndarray, optional
        Inequality constraints.
    A_eq, b_eq : ndarray, optional
        Equality constraints.
    tol : float, default 1e-9
        Pivoting tolerance.
    max_iter : int, default 100000
        Pivot limit per phase.

    Returns
    -------
    SimplexResult
        Solution, objective, status and pivot count.
    """
    c = np.asarray(c, dtype=float)
    n = c.size
    blocks, rhs = [], []
    n_slack = 0
    if A_ub is not None:
        A_ub = np.atleast_2d(np.asarray(A_ub, dtype=float))
        n_slack = A_ub.shape[0]
        blocks.append(np.hstack([A_ub, np.eye(n_slack)]))
        rhs.append(np.asarray(b_ub, dtype=float).reshape(-1))
    if A_eq is not None:
        A_eq = np.atleast_2d(np.asarray(A_eq, dtype=float))
        blocks.append(np.hstack([A_eq, np.zeros((A_eq.shape[0], n_slack))]))
        rhs.append(np.asarray(b_eq, dtype=float).reshape(-1))
    if not blocks:
        raise ValueError("At least one constraint block is required.")

    A = np.vstack(blocks)
    b = np.concatenate(rhs)
    if A.shape[1] != n + n_slack:
        raise ValueError(f"Constraint matrices must have {n} columns.")
    negative = b < 0
    A[negative] *= -1.0
    b[negative] *= -1.0

    m, n_struct = A.shape
    tableau = np.zeros((m + 1, n_struct + m + 1))
    tableau[:m, :n_struct] = A
    tableau[:m, n_struct : n_struct + m] = np.eye(m)
    tableau[:m, -1] = b
    tableau[-1, :n_struct] = -A.sum(axis=0)
    tableau[-1, -1] = -b.sum()
    basis = list(range(n_struct, n_struct + m))

    status, nit1 = _run_phase(tableau, basis, n_struct, tol, max_iter)
    if status != "optimal" or -tableau[-1, -1] > tol * max(1.0, float(b.sum())):
        return SimplexResult(np.zeros(n), np.nan, "infeasible", nit1)

    # drive remaining artificials out of the basis; rows with no structural entry are redundant
    for row, var in enumerate(basis):
        if var >= n_struct:
            nonzero = np.flatnonzero(np.abs(tableau[row, :n_struct]) > tol)
            if nonzero.size:
                col = int(nonzero[0])
                _pivot(tableau, row, col)
                basis[row] = col

    costs = np.concatenate([c, np.zeros(n_slack + m)])
    tableau[-1, :] = 0.0
    tableau[-1, :n_struct] = costs[:n_struct]
    for row, var in enumerate(basis):
        if costs[var] != 0.0:
            tableau[-1] -= costs[var] * tableau[row]

    status, nit2 = _run_phase(tableau, basis, n_struct, tol, max_iter)
    if status != "optimal":
        return SimplexResult(np.zeros(n), np.nan, status, nit1 + nit2)

    x = np.zeros(n_struct + m)
    for row, var in enumerate(basis):
        x[var] = tableau[row, -1]
    x = np.clip(x[:n], 0.0, None)
    return SimplexResult(x, float(c @ x), "optimal", nit1 + nit2)
