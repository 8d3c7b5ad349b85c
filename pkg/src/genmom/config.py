# Copyright 2026 The genmom Team. All rights reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""genmom config variables."""

import math


GENMOM_VERSION = "0.1.0"

HBAR = 1.0
DEFAULT_NORMALIZATION = 1.0 / math.sqrt(2.0 * math.pi)

# Grid
MIN_GRID_POINTS = 9
BOUNDARY_STENCIL_POINTS = 2
TRANSFORM_CHUNK_SIZE = 256

# Tolerances
EDGE_DECAY_TOL = 1e-12
NORMALIZATION_TOL = 1e-8
POLE_GUARD = 1e-12
SAME_STATE_TOL = 1e-8
ROOT_TOL = 1e-10
ROOT_DEDUP_TOL = 1e-8
BISECT_XTOL = 1e-13
WELL_ROOT_TOL = 1e-8
WELL_MINIMIZE_XTOL = 1e-14
ODE_RTOLS = (1e-10, 1e-12, 1e-13)
ODE_ATOL = 1e-14
GENERAL_RESIDUAL_TOL = 1e-5
QUAD_EPSABS = 1e-13
QUAD_EPSREL = 1e-12
QUAD_LIMIT = 500

# Verification suites
AVAILABLE_SUITES = [
    "commutator",
    "eigen",
    "fourier",
    "hermiticity",
    "kernel",
    "ortho",
    "well",
]
SUITE_ALL = "all"
AVAILABLE_FORMATS = ["json", "csv"]
CHECK_STATUSES = ["pass", "flag", "fail"]
REPORT_SCHEMA = 1

KERNEL_DRAWS = 50
HERMITICITY_DRAWS = 100
EIGEN_DRAWS = 50
COMMUTATOR_DRAWS = 100
WELL_A_SWEEP = [0.0, 0.3, 0.6, 0.9]
WELL_SCAN_POINTS = 2000
ORTHO_OFF_DIAGONAL_RATIO = 0.05

# Suite grids as (x_min, x_max, n) and draw ranges
KERNEL_GRID = (-4.0, 4.0, 2001)
KERNEL_DRAW_MIN_MODULUS = 1e-3
KERNEL_C_MODULUS_RANGE = (0.1, 10.0)
KERNEL_LABEL_RANGE = (-5.0, 5.0)
HERMITICITY_GRID = (-20.0, 20.0, 8001)
HERMITICITY_DISK_RADIUS = 0.9
HERMITICITY_LABEL_RANGE = (-3.0, 3.0)
NON_HERMITIAN_MIN_MODULUS = 0.1
EIGEN_GRID = (-5.0, 5.0, 2001)
EIGEN_PARAM_RANGE = (-0.6, 0.6)
EIGEN_K_RANGE = (0.5, 2.5)
EIGEN_QUADRATURE_POINTS = [0.3, 1.7, 4.9]
EIGEN_LIMIT_PARAMS = [1e-1, 1e-2, 1e-3]
EIGEN_LIMIT_RATIO = 0.2
EIGEN_PHASE_SAMPLES_PER_PERIOD = 40
PACKET_GRID = (-20.0, 20.0, 2001)
PACKET_CENTER_RANGE = (-2.0, 2.0)
PACKET_WIDTH_RANGE = (0.5, 2.0)
PACKET_MOMENTUM_RANGE = (-2.0, 2.0)
COMPOSITION_GRID = (-10.0, 10.0, 4001)
ROOT_SCAN_RANGE = (0.0, 3.0)
ROOT_SCAN_SEEDS = 301
WELL_LIMIT_A = 1e-6
WELL_LIMIT_TOL = 1e-5
WELL_WALL_TOL = 1e-8
COARSE_GRID = (-10.0, 10.0, 2001)

# Run parameters
DEFAULT_PARAMS = {
    "a": 0.5,
    "b": 0.0,
    "c": 0.3,
    "d": 0.0,
    "k": 1.0,
    "x": 1.0,
    "kp": 2.5,
    "L": 1.0,
    "m": 1.0,
    "n_max": 5,
    "window": 40.0,
    "k_window": 40.0,
    "n": 8001,
    "seed": 0,
}
INTEGER_PARAMS = ["level", "n", "n_max", "points", "seed"]

# Curves
CURVE_QUANTITIES = [
    "density_a",
    "density_b",
    "eta",
    "psi_n_imag",
    "psi_n_real",
    "residual_R",
    "sigma",
]
CURVE_EXTRA_PARAMS = ["level", "points", "x_max", "x_min"]
CURVE_DEFAULT_POINTS = 1001
CURVE_SIGNIFICANT_DIGITS = 17
CURVE_IMAG_WARN_TOL = 1e-10
CURVE_DEFAULT_RANGES = {
    "density_a": (0.0, 2.0 * math.pi),
    "density_b": (0.0, 2.0 * math.pi),
    "eta": (-10.0, 10.0),
    "residual_R": (-10.0, 10.0),
    "sigma": (-10.0, 10.0),
}

GENMOM_THREADS_ENV = "GENMOM_THREADS"

# Eigenfunction cases
CASE_A = "case_a"
CASE_B = "case_b"
CASE_GENERAL = "general"
EIGEN_CASES = [CASE_A, CASE_B, CASE_GENERAL]
