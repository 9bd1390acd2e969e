"""
Kernel SVM dual solver.
"""
from cvq_kernel.svm.model import (
    SvmModel,
    decision_function,
    decision_value,
    load_model,
    predict,
    predict_many,
    save_model,
    train,
)
from cvq_kernel.svm.problem import DualProblem
from cvq_kernel.svm.smo import compute_bias, dual_objective, kkt_violation, solve_dual
