"""
Default tolerances and numeric constants used across the lab.
"""

# Model
SINGULAR_GUARD = 1e-12
EQUALITY_TOL = 1e-12

# Finite-difference verification
FD_STEP = 1e-3
GATE_TOL = 1e-6
PIPELINE_GATE_TOL = 1e-5
NEGATIVE_CONTROL_TOL = 1e-3

# Reduced ODE integration
ODE_RTOL = 1e-9
ODE_ATOL = 1e-12
F_SOLVE_RTOL = 1e-11
F_SOLVE_ATOL = 1e-13
BLOW_UP_LEVEL = 1e8

# Method-of-lines solver
CFL = 0.4
U_FLOOR = 1e-12
MAX_STEPS = 5_000_000

# Airy series / asymptotic crossover
AIRY_Z_SWITCH = 7.0
AIRY_Z_OVERFLOW = 104.0

# Infinitesimal symmetry check
SYMMETRY_EPSILONS = (1e-1, 4.6e-2, 2.2e-2, 1e-2, 4.6e-3, 2.2e-3, 1e-3)
SYMMETRY_FLOOR_FACTOR = 10.0
SYMMETRY_MIN_SLOPE = 1.8
SYMMETRY_FD_STEP = 1e-2

# Superposition
SPACING_TIME_OFFSET = 0.5

# Figure windows, as (t0, t1, nt, x0, x1, nx)
FIGURE_WINDOW = (0.05, 3.0, 60, -10.0, 10.0, 81)
FIGURE_WINDOW_WIDE = (0.05, 3.0, 60, -45.0, 45.0, 181)

# Output
CSV_DIGITS = 17
