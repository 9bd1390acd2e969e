"""
Single-mode Gaussian-state algebra.
"""
from cvq_kernel.gaussian.channels import loss_channel, vacuum_fidelity, vacuum_overlap
from cvq_kernel.gaussian.decompositions import BlochMessiahFactors, bloch_messiah, circuit_matrix, total_squeeze
from cvq_kernel.gaussian.state import GaussianState
from cvq_kernel.gaussian.symplectic import Symplectic2, apply, rotation, squeezer
