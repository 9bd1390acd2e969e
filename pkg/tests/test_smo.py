import logging

import numpy as np
import pytest

from cvq_kernel.data.preprocessing import LatticeDataset
from cvq_kernel.kernels.matrix import kernel_matrix_from_table
from cvq_kernel.kernels.rbf import rbf_matrix
from cvq_kernel.kernels.table import build_table
from cvq_kernel.svm.model import decision_function, train
from cvq_kernel.svm.problem import DualProblem
from cvq_kernel.svm.smo import check_curvature, compute_bias, dual_objective, kkt_violation, solve_dual
from cvq_kernel.utils.exceptions import ConvergenceError, InvalidArgumentError


def _random_instance(rng, n):
    x = rng.normal(size=(n, 2))
    labels = np.where(rng.random(n) < 0.5, -1.0, 1.0)
    labels[0], labels[1] = 1.0, -1.0
    gamma = float(rng.uniform(0.2, 3.0))
    c = float(rng.choice([0.1, 1.0, 10.0]))
    return rbf_matrix(x, gamma=gamma), labels, c


def test_two_point_identity_kernel():
    problem = DualProblem(kernel=np.eye(2), labels=np.array([1.0, -1.0]), c=1.0)
    alpha = solve_dual(problem)
    np.testing.assert_allclose(alpha, [1.0, 1.0])
    assert compute_bias(alpha, problem) == pytest.approx(0.0, abs=1e-12)


def test_rejects_single_class():
    problem = DualProblem(kernel=np.eye(3), labels=np.ones(3))
    with pytest.raises(InvalidArgumentError):
        solve_dual(problem)


def test_rejects_single_point():
    problem = DualProblem(kernel=np.eye(1), labels=np.ones(1))
    with pytest.raises(InvalidArgumentError):
        solve_dual(problem)


def test_problem_validation():
    with pytest.raises(InvalidArgumentError):
        DualProblem(kernel=np.eye(2), labels=np.array([1.0, 0.0]))
    with pytest.raises(InvalidArgumentError):
        DualProblem(kernel=np.array([[1.0, 0.2], [0.1, 1.0]]), labels=np.array([1.0, -1.0]))
    with pytest.raises(InvalidArgumentError):
        DualProblem(kernel=np.eye(2), labels=np.array([1.0, -1.0]), c=0.0)
    with pytest.raises(InvalidArgumentError):
        DualProblem(kernel=np.eye(3), labels=np.array([1.0, -1.0]))


def test_matches_exhaustive_minimum(dual_oracle):
    rng = np.random.default_rng(2024)
    for _ in range(200):
        n = int(rng.integers(3, 7))
        kernel, labels, c = _random_instance(rng, n)
        problem = DualProblem(kernel=kernel, labels=labels, c=c)
        alpha = solve_dual(problem, tol=1e-10, max_passes=10_000)
        assert np.all(alpha >= 0) and np.all(alpha <= c)
        assert abs(labels @ alpha) < 1e-9
        assert dual_objective(alpha, problem) == pytest.approx(dual_oracle(kernel, labels, c), abs=1e-6)


def test_kkt_gap_below_tolerance():
    rng = np.random.default_rng(7)
    kernel, labels, c = _random_instance(rng, 40)
    problem = DualProblem(kernel=kernel, labels=labels, c=c)
    alpha = solve_dual(problem, tol=1e-6)
    assert kkt_violation(alpha, problem) < 1e-6 + 1e-9


def test_duplicate_points_do_not_hurt_objective():
    rng = np.random.default_rng(11)
    x = rng.normal(size=(8, 2))
    labels = np.array([1.0, 1.0, 1.0, 1.0, -1.0, -1.0, -1.0, -1.0])
    base = DualProblem(kernel=rbf_matrix(x, gamma=1.0), labels=labels)
    x_dup = np.vstack([x, x[:2]])
    labels_dup = np.concatenate([labels, labels[:2]])
    dup = DualProblem(kernel=rbf_matrix(x_dup, gamma=1.0), labels=labels_dup)
    obj_base = dual_objective(solve_dual(base, tol=1e-8), base)
    obj_dup = dual_objective(solve_dual(dup, tol=1e-8), dup)
    assert obj_dup <= obj_base + 1e-6


def test_xor_lattice_is_separated(gate8):
    coords = np.array([[0, 0], [25, 25], [0, 25], [25, 0]])
    labels = np.array([1, 1, -1, -1])
    data = LatticeDataset(coords=coords, labels=labels)
    kernel = kernel_matrix_from_table(data, build_table(gate8)).values
    problem = DualProblem(kernel=kernel, labels=labels.astype(float), c=10.0)
    alpha = solve_dual(problem, tol=1e-10)
    bias = compute_bias(alpha, problem)
    decision = kernel @ (labels * alpha) + bias
    assert np.all(np.sign(decision) == labels)
    assert bias == pytest.approx(0.0, abs=1e-6)


def test_mirror_symmetric_data_has_zero_bias():
    x = np.array([[1.0, 0.0], [2.0, 0.5], [0.5, 1.5], [-1.0, 0.0], [-2.0, -0.5], [-0.5, -1.5]])
    labels = np.array([1.0, 1.0, 1.0, -1.0, -1.0, -1.0])
    problem = DualProblem(kernel=rbf_matrix(x, gamma=0.5), labels=labels, c=1.0)
    alpha = solve_dual(problem, tol=1e-10)
    assert compute_bias(alpha, problem) == pytest.approx(0.0, abs=1e-6)


def test_budget_exhaustion_raises_with_report():
    rng = np.random.default_rng(3)
    kernel, labels, _ = _random_instance(rng, 30)
    problem = DualProblem(kernel=kernel, labels=labels, c=10.0)
    with pytest.raises(ConvergenceError) as info:
        solve_dual(problem, tol=1e-12, max_passes=1)
    err = info.value
    assert err.iterations == 30
    assert err.gap >= 1e-12
    assert err.alpha.shape == (30,)
    report = err.report()
    assert set(report) == {"message", "iterations", "gap", "alpha"}
    assert len(report["alpha"]) == 30


def test_seed_gives_reproducible_alpha():
    rng = np.random.default_rng(5)
    kernel, labels, c = _random_instance(rng, 25)
    problem = DualProblem(kernel=kernel, labels=labels, c=c)
    np.testing.assert_array_equal(solve_dual(problem, seed=4), solve_dual(problem, seed=4))


def test_indefinite_kernel_warns(caplog):
    kernel = np.array([[1.0, 2.0], [2.0, 1.0]])
    with caplog.at_level(logging.WARNING, logger="cvq-kernel"):
        assert check_curvature(kernel) == pytest.approx(-1.0)
    assert "indefinite" in caplog.text
    alpha = solve_dual(DualProblem(kernel=kernel, labels=np.array([1.0, -1.0]), c=1.0))
    assert np.all(np.isfinite(alpha))


def test_bias_requires_matching_alpha():
    problem = DualProblem(kernel=np.eye(2), labels=np.array([1.0, -1.0]))
    with pytest.raises(InvalidArgumentError):
        compute_bias(np.zeros(3), problem)


def _two_moon_like(rng, n):
    x = rng.normal(size=(n, 2))
    labels = np.where(x[:, 0] * x[:, 1] + 0.3 * rng.normal(size=n) > 0, 1.0, -1.0)
    labels[0], labels[1] = 1.0, -1.0
    return x, labels


def test_kkt_residual_on_training_sized_problem():
    rng = np.random.default_rng(225)
    x, labels = _two_moon_like(rng, 225)
    problem = DualProblem(kernel=rbf_matrix(x, gamma=3.0), labels=labels, c=1.0)
    alpha = solve_dual(problem, tol=1e-3)
    assert kkt_violation(alpha, problem) < 1e-3 + 1e-9
    assert np.all(alpha >= 0) and np.all(alpha <= 1.0)
    assert abs(labels @ alpha) < 1e-9


def test_permuting_training_points_keeps_decisions():
    rng = np.random.default_rng(13)
    x, labels = _two_moon_like(rng, 40)
    queries = rng.normal(size=(15, 2))
    perm = rng.permutation(40)
    base = train(rbf_matrix(x, gamma=1.0), labels, "rbf", tol=1e-8)
    shuffled = train(rbf_matrix(x[perm], gamma=1.0), labels[perm], "rbf", tol=1e-8)
    np.testing.assert_allclose(
        decision_function(shuffled, rbf_matrix(queries, x[perm], gamma=1.0)),
        decision_function(base, rbf_matrix(queries, x, gamma=1.0)),
        atol=1e-4,
    )


def test_flipping_labels_negates_decisions():
    rng = np.random.default_rng(14)
    x, labels = _two_moon_like(rng, 40)
    kernel = rbf_matrix(x, gamma=1.0)
    base = train(kernel, labels, "rbf", tol=1e-8)
    flipped = train(kernel, -labels, "rbf", tol=1e-8)
    np.testing.assert_allclose(decision_function(flipped, kernel), -decision_function(base, kernel), atol=1e-4)


@pytest.mark.parametrize("scale", [0.25, 4.0])
def test_kernel_scaling_with_inverse_box_keeps_decisions(scale):
    rng = np.random.default_rng(15)
    x, labels = _two_moon_like(rng, 40)
    kernel = rbf_matrix(x, gamma=1.0)
    base = train(kernel, labels, "rbf", c=1.0, tol=1e-8)
    scaled = train(scale * kernel, labels, "rbf", c=1.0 / scale, tol=1e-8)
    np.testing.assert_allclose(scale * scaled.alpha, base.alpha, atol=1e-6)
    np.testing.assert_allclose(decision_function(scaled, scale * kernel), decision_function(base, kernel), atol=1e-6)
