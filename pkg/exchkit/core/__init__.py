"""Finite alphabets, exact tuple laws and weighted exchangeability."""

from .constants import ExitCode, LPSolver, WeightFamily
from .distances import tv_distance
from .errors import (
    DecompositionMismatchError,
    InstanceFormatError,
    NotWeightedExchangeableError,
    SizeGuardError,
)
from .exchangeability import (
    SymmetryViolation,
    build_model,
    detilt,
    find_symmetry_violation,
    is_weighted_exchangeable,
    marginal,
    mix,
    rescale_weights,
)
from .models import (
    FiniteSpace,
    SymmetricKernel,
    TupleDistribution,
    Urn,
    WeightFunction,
    WeightProfile,
    ratio,
)

__all__ = [
    "DecompositionMismatchError",
    "ExitCode",
    "FiniteSpace",
    "InstanceFormatError",
    "LPSolver",
    "NotWeightedExchangeableError",
    "SizeGuardError",
    "SymmetricKernel",
    "SymmetryViolation",
    "TupleDistribution",
    "Urn",
    "WeightFamily",
    "WeightFunction",
    "WeightProfile",
    "build_model",
    "detilt",
    "find_symmetry_violation",
    "is_weighted_exchangeable",
    "marginal",
    "mix",
    "ratio",
    "rescale_weights",
    "tv_distance",
]
