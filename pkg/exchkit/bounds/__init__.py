"""Approximation bounds, their exact certification and the mixture projection."""

from .formulas import FreedmanGap, bound_finite, bound_general, freedman_gap
from .instances import Instance, random_instance, symmetric_noise_kernel
from .projection import ProjectionResult, lp_project, projection_grid, simplex_grid, weighted_iid_law
from .simplex import SimplexResult, simplex_minimize
from .verify import (
    REPORT_COLUMNS,
    BoundReport,
    SweepConfig,
    run_sweep,
    verify_finite,
    verify_general,
    verify_instance,
)

__all__ = [
    "REPORT_COLUMNS",
    "BoundReport",
    "FreedmanGap",
    "Instance",
    "ProjectionResult",
    "SimplexResult",
    "SweepConfig",
    "bound_finite",
    "bound_general",
    "freedman_gap",
    "lp_project",
    "projection_grid",
    "random_instance",
    "run_sweep",
    "simplex_grid",
    "simplex_minimize",
    "symmetric_noise_kernel",
    "verify_finite",
    "verify_general",
    "verify_instance",
    "weighted_iid_law",
]
