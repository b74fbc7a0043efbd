"""Weight sequence regimes and finite-n decay experiments."""

from .classify import Classification, classify_weight_sequence
from .decay import DecayPoint, beta_binomial_kernel, consistency_gap, tilted_polya_family, tv_decay_experiment
from .families import WeightSequenceSpec

__all__ = [
    "Classification",
    "DecayPoint",
    "WeightSequenceSpec",
    "beta_binomial_kernel",
    "classify_weight_sequence",
    "consistency_gap",
    "tilted_polya_family",
    "tv_decay_experiment",
]
