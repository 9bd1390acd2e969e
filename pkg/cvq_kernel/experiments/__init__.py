"""
Command experiments.
"""
from cvq_kernel.experiments.base import Experiment, State
from cvq_kernel.experiments.builder import REGISTRY, build_experiment
from cvq_kernel.experiments.classify import ClassifyExperiment, lattice_grid
from cvq_kernel.experiments.gate_sweep import GateSweepExperiment
from cvq_kernel.experiments.kernel_table import KernelTableExperiment
from cvq_kernel.experiments.kfold import KFoldExperiment
