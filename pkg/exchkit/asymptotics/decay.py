"""Finite-n decay of the distance to weighted i.i.d. mixtures along a consistent family."""

from typing import NamedTuple

import numpy as np
from scipy.special import betaln

from exchkit.bounds import Instance, bound_general
from exchkit.core.constants import MAX_DECAY_K, MAX_DECAY_N, MAX_ENUMERATION_N
from exchkit.core.distances import tv_distance
from exchkit.core.errors import SizeGuardError
from exchkit.core.exchangeability import marginal
from exchkit.core.models import SymmetricKernel
from exchkit.decomposition import mixture_marginal
from exchkit.extremal import domination_check, minor_cache
from exchkit.utils import tuple_digits

from .families import WeightSequenceSpec


class DecayPoint(NamedTuple):
    """Distance and bound at one ``n`` of a decay curve.

    Attributes
    ----------
    n : int
        Sequence length.
    k : int
        Number of leading coordinates.
    tv_exact : float
        Distance between ``P_k`` and the ``k``-marginal of the constructed mixture.
    bound_general : float
        ``k(k-1)/(2n) (prod_{i<=k} r_i)^{-1}``.
    prod_r_k : float
        ``prod_{i<=k} r_i``.
    dominated : bool
        Slot-level domination held on every occupied urn.
    """

    n: int
    k: int
    tv_exact: float
    bound_general: float
    prod_r_k: float
    dominated: bool


def beta_binomial_kernel(n: int, alpha: float, beta: float) -> SymmetricKernel:
    """Exchangeable Polya-urn law on ``{0, 1}^n`` as a symmetric kernel.

    A sequence with ``s`` ones has probability ``B(alpha + s, beta + n - s) / B(alpha, beta)``.
    """
    if alpha <= 0 or beta <= 0:
        raise ValueError(f"alpha and beta must be positive, got alpha={alpha}, beta={beta}.")
    s = tuple_digits(2, n).sum(axis=1)
    log_p = betaln(alpha + s, beta + n - s) - betaln(alpha, beta)
    return SymmetricKernel(n=n, c=2, values=np.exp(log_p))


def tilted_polya_family(
    spec: WeightSequenceSpec,
    mix_param: tuple[float, float],
    n: int,
) -> Instance:
    """Tilt the beta-binomial exchangeable law on ``{0, 1}^n`` by the family's weights.

    Parameters
    ----------
    spec : WeightSequenceSpec
        Ratio sequence providing ``lambda_i = (1, r_i)``.
    mix_param : tuple of float
        ``(alpha, beta)`` of the beta mixing law.
    n : int
        Sequence length, at most 12.

    Returns
    -------
    Instance
        Binary instance with the beta-binomial law as kernel.
    """
    if not 1 <= n <= MAX_ENUMERATION_N:
        raise SizeGuardError(f"n must be in 1..{MAX_ENUMERATION_N}, got {n}.")
    alpha, beta = mix_param
    return Instance(c=2, n=n, lam=spec.profile(n), g=beta_binomial_kernel(n, alpha, beta))


def tv_decay_experiment(
    spec: WeightSequenceSpec,
    k: int,
    n_list: list[int],
    mix_param: tuple[float, float] = (1.0, 1.0),
) -> list[DecayPoint]:
    """Distance of ``P_k`` to the constructed weighted i.i.d. mixture as ``n`` grows.

    Parameters
    ----------
    spec : WeightSequenceSpec
        Ratio sequence.
    k : int
        Number of leading coordinates, at most 3.
    n_list : list of int
        Sequence lengths, each in ``k..10``.
    mix_param : tuple of float, default (1.0, 1.0)
        ``(alpha, beta)`` of the beta-binomial core.

    Returns
    -------
    list of DecayPoint
        One point per entry of ``n_list``.
    """
    if not 1 <= k <= MAX_DECAY_K:
        raise SizeGuardError(f"k must be in 1..{MAX_DECAY_K}, got {k}.")
    if not n_list:
        raise ValueError("n_list must not be empty.")
    if max(n_list) > MAX_DECAY_N:
        raise SizeGuardError(f"Decay curves support n <= {MAX_DECAY_N}, got {max(n_list)}.")
    if min(n_list) < k:
        raise ValueError(f"Every n must be at least k = {k}.")

    points = []
    for n in n_list:
        inst = tilted_polya_family(spec, mix_param, n)
        lam = inst.lam
        mix = inst.mixture
        tv = tv_distance(marginal(inst.model, k), mixture_marginal(mix, lam, k))
        dominated = all(domination_check(lam, urn, k, minor_cache(lam, urn))[0] for urn in mix.urns)
        points.append(
            DecayPoint(
                n=n,
                k=k,
                tv_exact=tv,
                bound_general=bound_general(n, k, lam.ratios),
                prod_r_k=lam.prod_ratios(k),
                dominated=dominated,
            )
        )
    return points


def consistency_gap(spec: WeightSequenceSpec, mix_param: tuple[float, float], n: int) -> float:
    """Distance between the ``n``-marginal of the ``n+1`` tilted law and the ``n`` tilted law.

    The untilted beta-binomial core is consistent, so the gap is zero when
    every ratio is one; tilting generally breaks it.
    """
    if not 1 <= n < MAX_ENUMERATION_N:
        raise SizeGuardError(f"n must be in 1..{MAX_ENUMERATION_N - 1}, got {n}.")
    longer = tilted_polya_family(spec, mix_param, n + 1).model
    shorter = tilted_polya_family(spec, mix_param, n).model
    return tv_distance(marginal(longer, n), shorter)
