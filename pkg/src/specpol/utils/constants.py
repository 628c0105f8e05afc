"""Numeric defaults for specpol."""

# Moment matrix invariants
HERMITIAN_RTOL = 1e-12
PSD_RTOL = 1e-10

# Conjugate pairing of Spec2 points
PAIRING_RTOL = 1e-8
PAIRING_FLOOR_FACTOR = 10.0  # multiples of sqrt(eps) * ||C||

# Rayleigh refinement: discriminants below this many d * eps * scale are zero
REFINE_CLAMP_FACTOR = 8.0

# sigma evaluation
SVD_DIMENSION_THRESHOLD = 400
INVERSE_ITERATION_MAX_ITER = 200
INVERSE_ITERATION_RTOL = 1e-12

# Descent
DESCENT_STEP0 = 0.1
DESCENT_SHRINK = 0.5
DESCENT_TOL = 1e-10
DESCENT_MAX_ITER = 10_000

# Analysis
GAP_DELTA = 0.05
MAX_HALF_WIDTH = 0.05
SZEGO_EPSILON = 0.1
CIRCLE_SAMPLES = 720
OFFAXIS_IM_CUT = 0.1
REFERENCE_FACTOR = 4
DISCRETE_MATCH_TOL = 0.05  # Galerkin eigenvalue vs exact discrete eigenvalue

# Output
DEFAULT_PRECISION = 8
MIN_PRECISION = 6
MAX_PRECISION = 17
