"""
Import modules from submodules.
"""
from cvq_kernel.config.builder import build_config, dump_config, load_config
from cvq_kernel.data.datasets import generate_dataset
from cvq_kernel.data.preprocessing import discretize, standardize
from cvq_kernel.data.protocol import run_protocol
from cvq_kernel.kernels.builder import build_kernel_table
from cvq_kernel.kernels.squeezing import kappa, kernel
from cvq_kernel.kernels.units import GateLevel
from cvq_kernel.processor.noise import NoiseModel
from cvq_kernel.processor.sweep import sweep_gates
from cvq_kernel.svm.model import load_model, predict, save_model, train
from cvq_kernel.utils.commons import VERSION

__version__ = VERSION
