"""
Common constants used in the package.
"""
import math
import sys

VERSION = "0.1.0"

####################
# Lattice
####################

LATTICE_POINTS = 26
LATTICE_MAX = LATTICE_POINTS - 1
LATTICE_STEP = math.pi / LATTICE_MAX
HALF_PI = math.pi / 2

####################
# Kernel sources
####################

CLOSED_FORM = "closed-form"
NOISY_ANALYTIC = "noisy-analytic"
SIMULATED = "simulated"
MEASURED = "measured-import"
RBF = "rbf"

TABLE_SOURCES = (CLOSED_FORM, NOISY_ANALYTIC, SIMULATED, MEASURED)
PROTOCOL_SOURCES = (CLOSED_FORM, NOISY_ANALYTIC, SIMULATED)

####################
# Datasets
####################

MOONS = "moons"
CIRCLES = "circles"
BLOBS = "blobs"

DATASET_KINDS = (MOONS, CIRCLES, BLOBS)

####################
# Homodyne
####################

HOMODYNE_ANGLES = (0.0, math.pi / 4, math.pi / 2)
SAMPLES_PER_ANGLE = 10000

####################
# Numerics
####################

MAX_SQUEEZE_NATS = 25.0
SYMPLECTIC_TOL = 1e-9
UNCERTAINTY_TOL = 1e-9
DET_ROUNDOFF = 64 * sys.float_info.epsilon
SUPPORT_THRESHOLD = 1e-8

####################
# Output schemas
####################

SCHEMA_KERNEL_TABLE = "kernel-table"
SCHEMA_GATE_SWEEP = "gate-sweep"
SCHEMA_DATASET = "dataset"
SCHEMA_LATTICE = "lattice"
SCHEMA_PREDICTIONS = "predictions"
SCHEMA_DECISION_GRID = "decision-grid"
SCHEMA_ACCURACY = "accuracy-report"
SCHEMA_ACCURACY_DATASETS = "accuracy-datasets"
