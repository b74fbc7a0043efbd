"""Extreme-point mixture decomposition and the weighted i.i.d. approximant."""

from .mixture import UrnMixture, build_Q, decompose, mixture_marginal, reconstruct
from .sampling import sample_model

__all__ = [
    "UrnMixture",
    "build_Q",
    "decompose",
    "mixture_marginal",
    "reconstruct",
    "sample_model",
]
