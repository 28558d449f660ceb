"""
Global constants used across the maserengine project.
"""
from pathlib import Path

# Default paths
DEFAULT_OUTPUT_DIR = Path("runs")

# Unit convention tag required in every config file
UNITS_TAG = "hbar_kB_gammah_1"

# Environment variable for the batch worker-pool size
WORKERS_ENV_VAR = "MASERENGINE_WORKERS"

# Atom levels |1>, |2>, |3> are indices 0, 1, 2
ATOM_DIM = 3

# Numerical hygiene tolerances
DENSITY_TRACE_TOL = 1e-8
HERMITIAN_TOL = 1e-10
NEGATIVITY_TOL = 1e-8
HARD_FAILURE_TOL = 1e-4
ENTROPY_CUTOFF = 1e-14

# Entropy matching
T_BRACKET_LOW = 1e-6
T_BRACKET_HIGH_START = 1.0
T_BRACKET_MAX_DOUBLINGS = 200
ENTROPY_MATCH_TOL = 1e-9

# Truncation
TAIL_LEVELS = 5
DEFAULT_TAIL_TOLERANCE = 1e-7

# Integration defaults
DEFAULT_DT = 1e-3
DEFAULT_RECORD_EVERY = 0.5

# Steady-state window
STEADY_STATE_RATE_TOL = 1e-4
DEFAULT_WINDOW_START_FRACTION = 0.75
MIN_HEAT_CURRENT = 1e-8

# Q-function grid defaults
QGRID_RESOLUTION = 201
QGRID_SCALE = 1.2
QGRID_PADDING = 4.0
MIN_PHASES = 64

# Gaussian approximation of Poissonian statistics is reliable above this
GAUSSIAN_VALID_ALPHA_SQ = 30.0

# Frozen column order of ledger.csv
LEDGER_COLUMNS = (
    "t", "P1", "P2", "P3", "n_mean", "g2",
    "E_f", "W_f", "Wbound_f", "Eth_f", "S_f", "S_af",
    "F_h_f", "F_c_f", "F_c_af", "J_h", "J_c", "sigma",
)
