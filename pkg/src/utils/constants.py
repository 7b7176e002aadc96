"""
Constants used throughout formsym.
"""

# Application version
VERSION = "1.0.0"

# Logging configuration
LOGGER_NAME = "formsym"
DEFAULT_LOG_LEVEL = "WARNING"
LOGGING_CONFIG_FILE = "logging.conf"

# File configuration
CONFIG_FILE = "formsym_settings.json"
CONFIG_ENV_VAR = "FORMSYM_CONFIG"

# Exit codes
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DEGENERATE = 2
EXIT_RESOURCE_LIMIT = 3

# Certified numerics configuration
MIN_PRECISION_BITS = 128
DEFAULT_PRECISION_BITS = 128
GUARD_BITS = 64  # extra working bits on top of the certified precision
MAX_DENOMINATOR = 10 ** 12  # rational recognition of numeric coefficients

# Groebner configuration
DEFAULT_MAX_BASIS_SIZE = 400
DEFAULT_MAX_DEGREE = 40
DEFAULT_MAX_PAIRS = 20000

# Probe configuration
DEFAULT_TERNARY_PROBES = [
    [1, 2], [2, 3], [1, 1], [2, 2], [3, 1], [3, 2], [1, 3], [2, 5],
]
DEFAULT_BINARY_PROBES = ["2", "3", "5/2", "-7/3", "11/5", "-13/4", "17/6", "19/7"]
DEFAULT_STABLE_PROBE_COUNT = 3

# Variable names
BINARY_VARIABLE = "p"
BINARY_IMAGE_VARIABLE = "P"
TERNARY_VARIABLES = ("p", "q")
SATURATION_VARIABLE = "w"
INVARIANT_NAMES = ("I1", "I2", "I3", "I4", "I5", "I6", "I7", "I8")
THIRD_ORDER_NAMES = ("I1", "I2", "I3")
BINARY_INVARIANT_NAMES = ("J", "K")

# Highest jet order used by the ternary invariants
MAX_JET_ORDER = 4

# Report configuration
TERNARY_MODES = ("invariants", "signature", "count")

# Classification banners
BANNER_TWO_DIMENSIONAL = "Hessian is zero: two-dimensional symmetry group"
BANNER_ONE_DIMENSIONAL = "Form has a one-dimensional symmetry group"
BANNER_MAXIMAL = "Form has the maximal possible discrete symmetry group"
BANNER_GROUP_ORDER = "The number of elements in the symmetry group={}"
BANNER_SYMMETRY_COUNT = "the number of symmetries={}"
BANNER_SIGNATURE_DIMENSION = "dimension of the signature manifold={}"
