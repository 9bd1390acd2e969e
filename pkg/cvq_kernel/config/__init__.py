"""
Experiment configuration.
"""
from cvq_kernel.config.builder import build_config, dump_config, load_config
from cvq_kernel.config.models import ExperimentConfig
