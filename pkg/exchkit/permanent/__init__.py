"""Exact matrix permanents for urn-conditional normalizers."""

from .ryser import (
    PermanentMinorCache,
    permanent_minor,
    permanent_naive,
    permanent_ryser,
    weight_matrix,
)
from .scaled import ScaledReal

__all__ = [
    "PermanentMinorCache",
    "ScaledReal",
    "permanent_minor",
    "permanent_naive",
    "permanent_ryser",
    "weight_matrix",
]
