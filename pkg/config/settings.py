"""
Configuration settings for the ring-constrained shape optimizer.
"""

# Geometric tolerances (lengths normalized so that b <= 10)
TAU_GEOM = 1e-9
TAU_ANGLE = 1e-12
ANGLE_RENORM_LIMIT = 1e-9
ARC_SAMPLE_STEP = 1e-3
TURNING_TOL = 1e-6

# Solver tolerances
ROOT_XTOL = 1e-13
J_TIE_TOL = 1e-9
KKT_TOL = 1e-8
LAMBDA_EQ_TOL = 1e-12
BOUNDARY_XTOL = 1e-6
BOUNDARY_LIMIT = 64
MIN_CHORD_ANGLE = 1e-9
OUTER_ONLY_INNER_FRACTION = 1e-9
MAX_QUASI_SIDES = 4096

# Oracle defaults
ORACLE_Q_MAX = 16
ORACLE_Q_LIMIT = 64
ORACLE_GRID_N = 100
ORACLE_REFINE_MARGIN = 0.05
ORACLE_REFINE_TOP = 16
ENUMERATION_TOL = 1e-9
DESCENT_TOL = 5e-2
DESCENT_M = 360
DESCENT_RESTARTS = 16
DESCENT_MAX_ITER = 4000
DESCENT_MIN_STEP = 1e-12
HYBRID_PATTERNS = 32

# Inequality fuzzing
FUZZ_VERTEX_RANGE = (3, 64)
FUZZ_RADIUS_RANGE = (0.5, 5.0)
FUZZ_VARIANTS = 1
NEAR_EQUALITY_REL = 1e-6
INEQUALITY_REL_TOL = 1e-9
MAX_REDRAWS = 64

# Output formatting
SIGNIFICANT_DIGITS = 10
BETA_DECIMALS = 5
SVG_SIZE = 480

# Exit codes
EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_PARAMETER = 2
EXIT_IO = 3

# Environment
THREADS_ENV_VAR = "ANNULUS_OPT_THREADS"
SLOW_TESTS_ENV_VAR = "ANNULUS_OPT_SLOW_TESTS"

