"""Closed-form approximation bounds."""

from fractions import Fraction
from typing import NamedTuple

import numpy as np

from exchkit.utils import falling_factorial


class FreedmanGap(NamedTuple):
    """Sampling with versus without replacement from ``n`` distinct balls.

    Attributes
    ----------
    gap : float
        ``1 - (n)_k / n^k``, the probability of a repeated ball.
    df_bound : float
        ``k(k-1) / (2n)``.
    ok : bool
        Whether ``gap <= df_bound``.
    """

    gap: float
    df_bound: float
    ok: bool


def _check_ratios(r: np.ndarray | list[float], length: int, name: str) -> np.ndarray:
    r = np.asarray(r, dtype=float).reshape(-1)
    if r.size < length:
        raise ValueError(f"{name} needs at least {length} ratios, got {r.size}.")
    r = r[:length]
    if np.any(r <= 0) or np.any(r > 1):
        raise ValueError("Ratios must lie in (0, 1].")
    return r


def _check_nk(n: int, k: int) -> None:
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}.")
    if not 1 <= k <= n:
        raise ValueError(f"k must be in 1..{n}, got {k}.")


def bound_general(n: int, k: int, r: np.ndarray | list[float]) -> float:
    r"""Bound on the distance to the nearest mixture of weighted i.i.d. laws, any alphabet.

    .. math::

        \frac{k(k-1)}{2n} \Big(\prod_{i=1}^k r_i\Big)^{-1}

    Parameters
    ----------
    n : int
        Length of the finite sequence.
    k : int
        Number of leading coordinates, ``1 <= k <= n``.
    r : array_like
        Ratios ``r_1..r_k``; extra entries are ignored.

    Returns
    -------
    float
        The bound.
    """
    _check_nk(n, k)
    r = _check_ratios(r, k, "bound_general")
    return k * (k - 1) / (2 * n) / float(np.prod(r))


def bound_finite(c: int, n: int, k: int, r: np.ndarray | list[float]) -> float:
    r"""Bound for an alphabet of ``c`` points.

    .. math::

        \frac{ck}{n} \Big(\prod_{i=1}^n r_i\Big)^{-2}

    The product runs over all ``n`` ratios.
    """
    if c < 1:
        raise ValueError(f"c must be at least 1, got {c}.")
    _check_nk(n, k)
    r = _check_ratios(r, n, "bound_finite")
    return c * k / n / float(np.prod(r)) ** 2


def freedman_gap(n: int, k: int) -> FreedmanGap:
    """Compare the repeat probability ``1 - (n)_k / n^k`` with ``k(k-1) / (2n)``.

    The comparison is made in exact integer arithmetic.
    """
    _check_nk(n, k)
    distinct = falling_factorial(n, k)
    total = n**k
    # 1 - d/t <= k(k-1)/(2n)  <=>  2n(t - d) <= k(k-1) t
    ok = 2 * n * (total - distinct) <= k * (k - 1) * total
    gap = float(1 - Fraction(distinct, total))
    return FreedmanGap(gap=gap, df_bound=k * (k - 1) / (2 * n), ok=ok)
