"""Exact finite weighted exchangeability: urn decompositions, weighted i.i.d. approximation and bound certification."""

__version__ = "0.1.0"

from exchkit.core import (
    DecompositionMismatchError,
    ExitCode,
    FiniteSpace,
    InstanceFormatError,
    LPSolver,
    NotWeightedExchangeableError,
    SizeGuardError,
    SymmetricKernel,
    SymmetryViolation,
    TupleDistribution,
    Urn,
    WeightFamily,
    WeightFunction,
    WeightProfile,
    build_model,
    detilt,
    find_symmetry_violation,
    is_weighted_exchangeable,
    marginal,
    mix,
    ratio,
    rescale_weights,
    tv_distance,
)
from exchkit.permanent import (
    PermanentMinorCache,
    ScaledReal,
    permanent_minor,
    permanent_naive,
    permanent_ryser,
    weight_matrix,
)
from exchkit.extremal import (
    UrnGap,
    domination_check,
    gap_bound_rhs,
    kn_identity_check,
    sample_urn_conditional,
    sampling_ratio_check,
    tv_urn_gap,
    uniform_ratio_lemma_check,
    urn_conditional,
    urn_coordinate_marginal,
    urn_weighted_iid,
)
from exchkit.decomposition import UrnMixture, build_Q, decompose, mixture_marginal, reconstruct, sample_model
from exchkit.bounds import (
    BoundReport,
    FreedmanGap,
    Instance,
    ProjectionResult,
    SweepConfig,
    bound_finite,
    bound_general,
    freedman_gap,
    lp_project,
    projection_grid,
    random_instance,
    run_sweep,
    simplex_grid,
    verify_finite,
    verify_general,
    verify_instance,
)
from exchkit.asymptotics import (
    Classification,
    DecayPoint,
    WeightSequenceSpec,
    classify_weight_sequence,
    consistency_gap,
    tilted_polya_family,
    tv_decay_experiment,
)
from exchkit.io import dump_instance, load_instance, load_payload, write_instance
from exchkit.print import format_bound_report, print_bound_report
from exchkit.utils import falling_factorial, weak_compositions

__all__ = [
    "__version__",
    # Finite alphabets and tuple laws
    "FiniteSpace",
    "WeightFunction",
    "WeightProfile",
    "SymmetricKernel",
    "TupleDistribution",
    "Urn",
    "ratio",
    "tv_distance",
    # Weighted exchangeability
    "SymmetryViolation",
    "build_model",
    "detilt",
    "find_symmetry_violation",
    "is_weighted_exchangeable",
    "marginal",
    "mix",
    "rescale_weights",
    # Permanents
    "PermanentMinorCache",
    "ScaledReal",
    "permanent_minor",
    "permanent_naive",
    "permanent_ryser",
    "weight_matrix",
    # Extreme points
    "UrnGap",
    "domination_check",
    "gap_bound_rhs",
    "kn_identity_check",
    "sample_urn_conditional",
    "sampling_ratio_check",
    "tv_urn_gap",
    "uniform_ratio_lemma_check",
    "urn_conditional",
    "urn_coordinate_marginal",
    "urn_weighted_iid",
    # Decomposition
    "UrnMixture",
    "build_Q",
    "decompose",
    "mixture_marginal",
    "reconstruct",
    "sample_model",
    # Bounds and certification
    "BoundReport",
    "FreedmanGap",
    "Instance",
    "ProjectionResult",
    "SweepConfig",
    "bound_finite",
    "bound_general",
    "freedman_gap",
    "lp_project",
    "projection_grid",
    "random_instance",
    "run_sweep",
    "simplex_grid",
    "verify_finite",
    "verify_general",
    "verify_instance",
    # Asymptotics
    "Classification",
    "DecayPoint",
    "WeightSequenceSpec",
    "classify_weight_sequence",
    "consistency_gap",
    "tilted_polya_family",
    "tv_decay_experiment",
    # Instance files
    "dump_instance",
    "load_instance",
    "load_payload",
    "write_instance",
    # Printing
    "format_bound_report",
    "print_bound_report",
    # Combinatorics
    "falling_factorial",
    "weak_compositions",
    # Errors and enums
    "DecompositionMismatchError",
    "InstanceFormatError",
    "NotWeightedExchangeableError",
    "SizeGuardError",
    "ExitCode",
    "LPSolver",
    "WeightFamily",
]
