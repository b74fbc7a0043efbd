"""Construction and testing of weighted exchangeable laws."""

from typing import NamedTuple

import numpy as np

from exchkit.utils import isclose_symmetric

from .constants import DEFAULT_ATOL, DEFAULT_RTOL
from .models import SymmetricKernel, TupleDistribution, WeightProfile


class SymmetryViolation(NamedTuple):
    """A transposition under which the de-tilted law is not invariant.

    Attributes
    ----------
    i, j : int
        Transposed coordinates, 1-based.
    point : tuple of int
        A tuple ``x`` with ``h(x) != h(x o (i j))``.
    value, swapped_value : float
        ``h(x)`` and ``h(x o (i j))`` for ``h = f / prod lambda_i``.
    """

    i: int
    j: int
    point: tuple[int, ...]
    value: float
    swapped_value: float


def _check_profile(f: TupleDistribution, lam: WeightProfile) -> None:
    if lam.n != f.k or lam.c != f.c:
        raise ValueError(
            f"Weight profile shape (n, c) = ({lam.n}, {lam.c}) does not match the law's (k, c) = {f.shape}."
        )


def build_model(lam: WeightProfile, g: SymmetricKernel) -> TupleDistribution:
    r"""Build the weighted exchangeable law :math:`f_n \propto (\prod_i \lambda_i(x_i)) g(x)`.

    Parameters
    ----------
    lam : WeightProfile
        Weight functions ``lambda_1..lambda_n``.
    g : SymmetricKernel
        Positive symmetric kernel on ``X^n``.

    Returns
    -------
    TupleDistribution
        Normalized law over ``X^n``.
    """
    if lam.n != g.n or lam.c != g.c:
        raise ValueError(f"Profile (n, c) = ({lam.n}, {lam.c}) does not match kernel ({g.n}, {g.c}).")
    weights = lam.tilt() * g.values
    total = weights.sum()
    assert total > 0, "positive weights and kernel give a positive normalizer"
    return TupleDistribution(k=g.n, c=g.c, probs=weights / total)


def detilt(f: TupleDistribution, lam: WeightProfile) -> TupleDistribution:
    """Normalize ``x -> f(x) / prod_i lambda_i(x_i)`` into a probability law.

    The result is exchangeable exactly when ``f`` is ``lam``-exchangeable.
    """
    _check_profile(f, lam)
    return TupleDistribution.from_weights(f.k, f.c, f.probs / lam.tilt())


def find_symmetry_violation(
    f: TupleDistribution,
    lam: WeightProfile,
    rtol: float = DEFAULT_RTOL,
    atol: float = DEFAULT_ATOL,
) -> SymmetryViolation | None:
    """Find a transposition that breaks the symmetry of ``f / prod lambda_i``.

    All transpositions ``(i j)`` with ``i < j`` are scanned in lexicographic
    order; the first failing tuple of the first failing transposition is
    returned.

    Parameters
    ----------
    f : TupleDistribution
        Law over ``X^n``.
    lam : WeightProfile
        Candidate weights.
    rtol, atol : float
        Relative and absolute tolerances, applied symmetrically.

    Returns
    -------
    SymmetryViolation or None
        None when the de-tilted law is symmetric.
    """
    _check_profile(f, lam)
    h = (f.probs / lam.tilt()).reshape((f.c,) * f.k)
    for i in range(f.k):
        for j in range(i + 1, f.k):
            swapped = np.swapaxes(h, i, j)
            close = isclose_symmetric(h, swapped, rtol=rtol, atol=atol)
            if not np.all(close):
                point = tuple(int(v) for v in np.argwhere(~close)[0])
                return SymmetryViolation(
                    i=i + 1,
                    j=j + 1,
                    point=point,
                    value=float(h[point]),
                    swapped_value=float(swapped[point]),
                )
    return None


def is_weighted_exchangeable(f: TupleDistribution, lam: WeightProfile, tol: float = DEFAULT_RTOL) -> bool:
    """Check whether ``f`` is ``lam``-exchangeable.

    Parameters
    ----------
    f : TupleDistribution
        Law over ``X^n``.
    lam : WeightProfile
        Weight functions ``lambda_1..lambda_n``.
    tol : float, default 1e-8
        Relative tolerance; zero-mass cells are compared with the absolute
        tolerance ``1e-10``.

    Returns
    -------
    bool
        True iff ``x -> f(x) / prod_i lambda_i(x_i)`` is permutation symmetric.
    """
    return find_symmetry_violation(f, lam, rtol=tol, atol=DEFAULT_ATOL) is None


def rescale_weights(lam: WeightProfile, theta: np.ndarray | list[float], tol: float = DEFAULT_RTOL) -> WeightProfile:
    """Rescale each weight function, ``lambda_i -> theta_i lambda_i``, with ``prod theta_i = 1``.

    Weighted exchangeability is defined up to this equivalence, and the
    ratios ``r_i`` are scale invariant.
    """
    theta = np.asarray(theta, dtype=float)
    if theta.shape != (lam.n,):
        raise ValueError(f"theta must have length {lam.n}, got shape {theta.shape}.")
    if np.any(theta <= 0) or not np.all(np.isfinite(theta)):
        raise ValueError("theta entries must be finite and strictly positive.")
    product = float(np.exp(np.sum(np.log(theta))))
    if not isclose_symmetric(product, 1.0, rtol=tol, atol=DEFAULT_ATOL):
        raise ValueError(f"theta must multiply to 1, got {product!r}.")
    return WeightProfile(lam.matrix * theta[:, np.newaxis])


def marginal(p: TupleDistribution, k: int) -> TupleDistribution:
    """Marginal law of the first ``k`` coordinates."""
    if not 1 <= k <= p.k:
        raise ValueError(f"k must be in 1..{p.k}, got {k}.")
    if k == p.k:
        return p
    summed = p.as_array().sum(axis=tuple(range(k, p.k)))
    return TupleDistribution.from_weights(k, p.c, summed.reshape(-1))


def mix(laws: list[TupleDistribution], alphas: np.ndarray | list[float]) -> TupleDistribution:
    """Convex combination ``sum_m alpha_m laws_m`` of laws with a common shape."""
    if not laws:
        raise ValueError("Need at least one law to mix.")
    alphas = np.asarray(alphas, dtype=float)
    if alphas.shape != (len(laws),) or np.any(alphas < 0):
        raise ValueError("Mixing weights must be nonnegative, one per law.")
    if abs(alphas.sum() - 1.0) > 1e-10:
        raise ValueError("Mixing weights must sum to 1.")
    shapes = {law.shape for law in laws}
    if len(shapes) != 1:
        raise ValueError("All laws must share (k, c).")
    stacked = np.vstack([law.probs for law in laws])
    return TupleDistribution.from_weights(laws[0].k, laws[0].c, alphas @ stacked)
