"""Total variation distance between tuple laws."""

import math

import numpy as np

from .models import TupleDistribution


def tv_distance(p: TupleDistribution, q: TupleDistribution) -> float:
    r"""Compute the total variation distance between two laws on the same ``X^k``.

    .. math::

        \|P - Q\|_{TV} = \sup_A |P(A) - Q(A)| = \frac{1}{2} \sum_z |P(z) - Q(z)|.

    Parameters
    ----------
    p, q : TupleDistribution
        Laws with identical tuple length and alphabet size.

    Returns
    -------
    float
        Distance in ``[0, 1]``.
    """
    if p.shape != q.shape:
        raise ValueError(f"Dimension mismatch: P has (k, c) = {p.shape}, Q has {q.shape}.")
    value = 0.5 * math.fsum(np.abs(p.probs - q.probs))
    return min(max(value, 0.0), 1.0)
