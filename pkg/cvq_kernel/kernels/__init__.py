"""
Squeezing-phase kernel evaluation.
"""
from cvq_kernel.kernels.matrix import (
    KernelMatrix,
    cross_matrix_from_table,
    kernel_matrix_continuous,
    kernel_matrix_from_table,
)
from cvq_kernel.kernels.rbf import rbf_kernel, rbf_matrix
from cvq_kernel.kernels.squeezing import kappa, kernel
from cvq_kernel.kernels.table import KernelTable, build_table, read_table_csv
from cvq_kernel.kernels.units import GateLevel, db_nats_convert, db_to_nats, nats_to_db
