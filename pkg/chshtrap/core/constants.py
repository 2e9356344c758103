"""
Constants for chsh-trap.

These values are FROZEN. Tolerances are part of the public contract of the
validators and the evaluators; changing them changes what "valid" and
"violation" mean for every downstream result.
"""

import math
from typing import Final

# =============================================================================
# BASIS
# =============================================================================
# Two-qubit basis order {|11>, |10>, |01>, |00>}. Single-qubit order {|1>, |0>}.
# Two-qubit index = 2 * index_A + index_B with index 0 = excited.

BASIS_LABEL: Final[str] = "11,10,01,00"

EXCITED: Final[int] = 0
GROUND: Final[int] = 1

# =============================================================================
# VALIDATION TOLERANCES
# =============================================================================

HERMITIAN_TOL: Final[float] = 1e-12
TRACE_TOL: Final[float] = 1e-12
PSD_TOL: Final[float] = 1e-10  # eigen-solvers amplify rounding
X_STRUCTURE_TOL: Final[float] = 1e-12
CORRELATION_IMAG_TOL: Final[float] = 1e-10
LORENTZIAN_IMAG_TOL: Final[float] = 1e-12

# Positions outside the diagonal and anti-diagonal of a 4x4 matrix
OFF_X_ELEMENTS: Final[tuple[tuple[int, int], ...]] = tuple(
    (i, j) for i in range(4) for j in range(4) if i != j and i + j != 3
)

# =============================================================================
# BELL BOUNDS
# =============================================================================

CLASSICAL_BOUND: Final[float] = 2.0
TSIRELSON_BOUND: Final[float] = 2.0 * math.sqrt(2.0)
BOUND_SLACK: Final[float] = 1e-9

# B = 2 exactly at x = 0 (every state decays to |00>), which is not a violation
VIOLATION_SLACK: Final[float] = 1e-12

RESTRICTED_CONSISTENCY_TOL: Final[float] = 1e-9

# Brute-force oracle vs Horodecki maximum
ORACLE_TOL: Final[float] = 1e-4

# =============================================================================
# ROOT FINDING
# =============================================================================

THRESHOLD_XTOL: Final[float] = 1e-12
PURITY_TOL: Final[float] = 1e-10
PROTECTION_TIME_TOL: Final[float] = 1e-10

# =============================================================================
# DEFAULTS
# =============================================================================

DEFAULT_SWEEP_POINTS: Final[int] = 201
DEFAULT_GRID_DENSITY: Final[int] = 12
DEFAULT_RESTARTS: Final[int] = 32
DEFAULT_SEED: Final[int] = 0
FIGURE_PURITIES: Final[tuple[float, ...]] = (1.0, 0.9, 0.8, 0.7, 0.6)
MAX_ENTANGLED_ALPHA: Final[float] = 1.0 / math.sqrt(2.0)

# =============================================================================
# OUTPUT
# =============================================================================

CSV_FLOAT_FORMAT: Final[str] = "%.12g"
