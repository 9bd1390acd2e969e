"""
Simulated measurement-induced squeezing processor.
"""
from cvq_kernel.processor.estimation import (
    CovEstimate,
    bootstrap_kappa_stderr,
    estimate_covariance,
    kappa_from_gate,
    output_levels,
)
from cvq_kernel.processor.gate import GateSetting, gate_setting, output_state_analytic
from cvq_kernel.processor.homodyne import HomodyneBatch, sample_gate
from cvq_kernel.processor.noise import NoiseModel
from cvq_kernel.processor.sweep import noisy_analytic_table, simulated_table, sweep_gates
