import numpy as np
import pytest
from sklearn.svm import SVC

from cvq_kernel.kernels.rbf import rbf_matrix
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
from cvq_kernel.svm.smo import dual_objective
from cvq_kernel.utils.exceptions import InvalidArgumentError


@pytest.fixture
def blobs():
    rng = np.random.default_rng(17)
    x = np.vstack([rng.normal(-1.0, 0.8, size=(30, 2)), rng.normal(1.0, 0.8, size=(30, 2))])
    y = np.concatenate([-np.ones(30), np.ones(30)])
    return x, y


def _fixed_model(bias):
    return SvmModel(
        alpha=np.array([0.5, 0.5]),
        bias=bias,
        labels=np.array([1.0, -1.0]),
        provenance="closed-form",
    )


def test_decision_value_examples():
    model = _fixed_model(0.1)
    assert decision_value(model, np.array([0.8, 0.4])) == pytest.approx(0.3)
    assert decision_value(model, np.array([1.0, 0.2])) == pytest.approx(0.5)
    assert predict(model, np.array([0.8, 0.4])) == 1
    assert predict(model, np.array([0.0, 0.8])) == -1


def test_zero_decision_predicts_positive():
    model = _fixed_model(0.0)
    assert decision_value(model, np.array([0.4, 0.4])) == 0.0
    assert predict(model, np.array([0.4, 0.4])) == 1
    np.testing.assert_array_equal(predict_many(model, np.array([[0.4, 0.4], [0.1, 0.3]])), [1, -1])


def test_kernel_length_mismatch():
    model = _fixed_model(0.0)
    with pytest.raises(InvalidArgumentError):
        decision_value(model, np.ones(3))
    with pytest.raises(InvalidArgumentError):
        decision_function(model, np.ones((2, 3)))


def test_invalid_alpha_rejected():
    with pytest.raises(InvalidArgumentError):
        SvmModel(alpha=np.array([-0.1, 0.1]), bias=0.0, labels=np.array([1.0, 1.0]), provenance="rbf")
    with pytest.raises(InvalidArgumentError):
        SvmModel(alpha=np.array([2.0, 2.0]), bias=0.0, labels=np.array([1.0, -1.0]), provenance="rbf", c=1.0)
    with pytest.raises(InvalidArgumentError):
        SvmModel(alpha=np.array([0.5, 0.2]), bias=0.0, labels=np.array([1.0, -1.0]), provenance="rbf")
    with pytest.raises(InvalidArgumentError):
        SvmModel(alpha=np.array([0.5]), bias=0.0, labels=np.array([1.0, -1.0]), provenance="rbf")


def test_train_separates_blobs(blobs):
    x, y = blobs
    model = train(rbf_matrix(x), y, provenance="rbf", coords=x)
    accuracy = np.mean(predict_many(model, rbf_matrix(x)) == y)
    assert accuracy > 0.9
    assert 0 < model.support.size <= model.size
    assert model.coords.shape == (60, 2)


def test_agrees_with_libsvm(blobs):
    x, y = blobs
    kernel = rbf_matrix(x)
    model = train(kernel, y, provenance="rbf", c=1.0, tol=1e-8)
    reference = SVC(kernel="precomputed", C=1.0, tol=1e-8).fit(kernel, y)
    ref_alpha = np.zeros(y.size)
    ref_alpha[reference.support_] = np.abs(reference.dual_coef_[0])
    problem = DualProblem(kernel=kernel, labels=y, c=1.0)
    assert dual_objective(model.alpha, problem) == pytest.approx(dual_objective(ref_alpha, problem), abs=1e-5)

    rng = np.random.default_rng(1)
    queries = rng.uniform(-3, 3, size=(200, 2))
    k_rows = rbf_matrix(queries, x)
    ours = decision_function(model, k_rows)
    theirs = reference.decision_function(k_rows)
    confident = np.abs(theirs) > 1e-3
    np.testing.assert_array_equal(np.sign(ours[confident]), np.sign(theirs[confident]))
    np.testing.assert_allclose(ours, theirs, atol=1e-3)


def test_save_and_load(tmp_path, blobs):
    x, y = blobs
    model = train(rbf_matrix(x), y, provenance="rbf", coords=x)
    path = tmp_path / "model.json"
    save_model(model, path)
    loaded = load_model(path)
    np.testing.assert_allclose(loaded.alpha, model.alpha)
    np.testing.assert_allclose(loaded.coords, model.coords)
    assert loaded.bias == pytest.approx(model.bias)
    assert loaded.provenance == "rbf"
    assert path.read_text().endswith("\n")
