"""Constants and enums for finite weighted exchangeability."""

from enum import Enum, IntEnum


class WeightFamily(str, Enum):
    """Named families of weight ratio sequences r_1, r_2, ..."""

    CONSTANT = "constant"
    GEOMETRIC_DEFECT = "geometric_defect"
    POLYNOMIAL_DEFECT = "polynomial_defect"
    GEOMETRIC = "geometric"
    POWER = "power"


class LPSolver(str, Enum):
    """Linear programming backends for the mixture projection."""

    SIMPLEX = "simplex"
    HIGHS = "highs"


class ExitCode(IntEnum):
    """Command line exit codes."""

    SUCCESS = 0
    VERIFICATION_FAILURE = 1
    INPUT_ERROR = 2


# Tolerances
DEFAULT_RTOL = 1e-8
DEFAULT_ATOL = 1e-10
PROB_SUM_TOL = 1e-10
NEGATIVE_CLAMP_TOL = 1e-12
BOUND_PASS_TOL = 1e-10
LP_TOL = 1e-8

# Size guards
MAX_DENSE_CELLS = 2**24
MAX_ENUMERATION_N = 12
MAX_RYSER_N = 24
MAX_NAIVE_N = 10
MAX_FULL_CHAIN_N = 8

# Asymptotic experiments
MAX_DECAY_N = 10
MAX_DECAY_K = 3
DEFAULT_TRUNCATION = 1_000_000

# Sweep defaults
DEFAULT_SWEEP_INSTANCES = 200
DEFAULT_SWEEP_C = (2, 3)
DEFAULT_SWEEP_N = (2, 7)
DEFAULT_SWEEP_R_MIN = (1.0, 0.5, 0.2)

# Serialization
FORMAT_VERSION = "1"
THREADS_ENV_VAR = "EXCHKIT_THREADS"
