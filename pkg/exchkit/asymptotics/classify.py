"""Convergence regimes of weight ratio sequences."""

import math
from typing import NamedTuple

import numpy as np

from exchkit.core.constants import DEFAULT_TRUNCATION, WeightFamily

from .families import WeightSequenceSpec


class Classification(NamedTuple):
    """Partial sums of a ratio sequence and the closed-form regime flags of its family.

    Attributes
    ----------
    sum_one_minus_r : float
        ``sum_{i<=N} (1 - r_i)``.
    sum_r : float
        ``sum_{i<=N} r_i``.
    prod_r : float
        ``prod_{i<=N} r_i``.
    summable_defect : bool
        ``sum (1 - r_i) < infinity``, equivalently ``prod r_i > 0``: the
        infinite sequence is a mixture of weighted i.i.d. laws.
    ratio_sum_diverges : bool
        ``sum r_i = infinity``.
    min_max_sum_diverges : bool
        ``sum min/max = infinity`` on the binary alphabet, the same as
        ``ratio_sum_diverges`` there.
    prod_limit : float or None
        ``prod_{i>=1} r_i`` when the family gives it in closed form.
    """

    sum_one_minus_r: float
    sum_r: float
    prod_r: float
    summable_defect: bool
    ratio_sum_diverges: bool
    min_max_sum_diverges: bool
    prod_limit: float | None


def _q_product(a: float, q: float) -> float:
    """``prod_{i>=1} (1 - a q^i)`` summed in log space until the terms vanish."""
    total = 0.0
    term = a * q
    while term > 1e-18:
        total += math.log1p(-term)
        term *= q
    return math.exp(total)


def _closed_form(spec: WeightSequenceSpec) -> tuple[bool, bool, float | None]:
    """Return ``(summable_defect, ratio_sum_diverges, prod_limit)`` for the family."""
    match spec.family:
        case WeightFamily.CONSTANT:
            flat = spec.a == 1.0
            return flat, True, 1.0 if flat else 0.0
        case WeightFamily.GEOMETRIC_DEFECT:
            return True, True, _q_product(spec.a, spec.q)
        case WeightFamily.POLYNOMIAL_DEFECT:
            summable = spec.p > 1
            return summable, True, None if summable else 0.0
        case WeightFamily.GEOMETRIC:
            flat = spec.a == 1.0
            return flat, flat, 1.0 if flat else 0.0
        case WeightFamily.POWER:
            return False, spec.p <= 1, 0.0
    raise ValueError(f"Unknown weight family {spec.family!r}.")


def classify_weight_sequence(spec: WeightSequenceSpec, N: int = DEFAULT_TRUNCATION) -> Classification:
    """Classify a ratio sequence against the weighted de Finetti conditions.

    Partial sums and products up to ``N`` are reported for illustration; the
    flags come from the closed-form behavior of the named family, since a
    finite truncation cannot decide convergence of a series.

    Parameters
    ----------
    spec : WeightSequenceSpec
        The ratio sequence.
    N : int, default 1000000
        Truncation for the partial sums.

    Returns
    -------
    Classification
        Partial sums, product and regime flags.
    """
    if N < 1:
        raise ValueError(f"N must be at least 1, got {N}.")
    r = spec.ratios(N)
    with np.errstate(divide="ignore"):
        log_prod = float(np.sum(np.log(r)))
    summable, diverges, limit = _closed_form(spec)
    return Classification(
        sum_one_minus_r=float(np.sum(1.0 - r)),
        sum_r=float(np.sum(r)),
        prod_r=math.exp(log_prod) if log_prod > -745.0 else 0.0,
        summable_defect=summable,
        ratio_sum_diverges=diverges,
        min_max_sum_diverges=diverges,
        prod_limit=limit,
    )
