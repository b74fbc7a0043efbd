"""Urn-conditional extreme points, weighted i.i.d. approximants and their gaps."""

from .gaps import (
    UrnGap,
    domination_check,
    gap_bound_rhs,
    kn_identity_check,
    sampling_ratio_check,
    tv_urn_gap,
    uniform_ratio_lemma_check,
)
from .sampler import sample_urn_conditional
from .urn_laws import (
    conditional_weights,
    distinct_support,
    minor_cache,
    urn_conditional,
    urn_coordinate_marginal,
    urn_weighted_iid,
    weighted_iid_factors,
)

__all__ = [
    "UrnGap",
    "conditional_weights",
    "distinct_support",
    "domination_check",
    "gap_bound_rhs",
    "kn_identity_check",
    "minor_cache",
    "sample_urn_conditional",
    "sampling_ratio_check",
    "tv_urn_gap",
    "uniform_ratio_lemma_check",
    "urn_conditional",
    "urn_coordinate_marginal",
    "urn_weighted_iid",
    "weighted_iid_factors",
]
