import numpy as np
import pytest
from pydantic import ValidationError

from cvq_kernel.data.datasets import (
    DatasetParams,
    LabeledDataset,
    blob_centers,
    gen_blobs,
    gen_circles,
    gen_moons,
    generate_dataset,
)
from cvq_kernel.utils.exceptions import InvalidArgumentError


@pytest.mark.parametrize("factory", [gen_moons, gen_circles, gen_blobs])
def test_balanced_and_signed(factory):
    ds = factory(n=300, seed=3)
    assert ds.points.shape == (300, 2)
    assert set(np.unique(ds.labels)) == {-1, 1}
    assert np.sum(ds.labels == 1) == 150
    assert ds.seed == 3


@pytest.mark.parametrize("factory", [gen_moons, gen_circles, gen_blobs])
def test_seeded(factory):
    a = factory(n=40, seed=9)
    b = factory(n=40, seed=9)
    c = factory(n=40, seed=10)
    np.testing.assert_array_equal(a.points, b.points)
    assert not np.array_equal(a.points, c.points)


def test_inner_circle_is_positive():
    ds = gen_circles(n=200, factor=0.5, noise_sd=0.0, seed=0)
    radius = np.linalg.norm(ds.points, axis=1)
    np.testing.assert_allclose(radius[ds.labels == 1], 0.5)
    np.testing.assert_allclose(radius[ds.labels == -1], 1.0)


def test_zero_sd_blobs_collapse_on_centers():
    ds = gen_blobs(n=20, cluster_sd=0.0, seed=1)
    for label in (-1, 1):
        pts = ds.points[ds.labels == label]
        assert np.ptp(pts, axis=0).max() == 0.0
    assert np.linalg.norm(ds.points[ds.labels == 1][0] - ds.points[ds.labels == -1][0]) == pytest.approx(1.0)


@pytest.mark.parametrize("cluster_sd", [0.0, 0.1, 0.8, 2.0])
def test_blob_centers_are_separated(cluster_sd):
    for seed in range(200):
        centers = blob_centers(cluster_sd, seed)
        distance = np.linalg.norm(centers[0] - centers[1])
        assert distance == pytest.approx(max(6.0 * cluster_sd, 1.0))


def test_default_blobs_are_separable_by_nearest_center():
    for seed in range(50):
        ds = gen_blobs(n=300, cluster_sd=0.8, seed=seed)
        centers = blob_centers(0.8, seed)
        distances = np.linalg.norm(ds.points[:, None, :] - centers[None, :, :], axis=2)
        predicted = np.where(distances[:, 1] < distances[:, 0], 1, -1)
        assert np.mean(predicted == ds.labels) >= 0.97


@pytest.mark.parametrize("n", [0, 2, 3, 301])
def test_rejects_bad_sizes(n):
    with pytest.raises(InvalidArgumentError):
        gen_moons(n=n)


def test_rejects_bad_parameters():
    with pytest.raises(InvalidArgumentError):
        gen_moons(n=10, noise_sd=-0.1)
    with pytest.raises(InvalidArgumentError):
        gen_circles(n=10, factor=1.0)
    with pytest.raises(InvalidArgumentError):
        gen_blobs(n=10, centers=3)


def test_labeled_dataset_validation():
    with pytest.raises(InvalidArgumentError):
        LabeledDataset(points=np.zeros((3, 2)), labels=np.ones(3))
    with pytest.raises(InvalidArgumentError):
        LabeledDataset(points=np.zeros((2, 2)), labels=np.array([0, 1]))
    with pytest.raises(InvalidArgumentError):
        LabeledDataset(points=np.zeros((1, 2)), labels=np.array([1]))
    with pytest.raises(InvalidArgumentError):
        LabeledDataset(points=np.array([[0.0, np.nan], [1.0, 1.0]]), labels=np.array([1, -1]))


def test_generate_dataset_dispatch():
    params = DatasetParams(n_samples=40, blobs_sd=0.1)
    ds = generate_dataset("blobs", params, seed=4)
    np.testing.assert_array_equal(ds.points, gen_blobs(n=40, cluster_sd=0.1, seed=4).points)
    assert ds.kind == "blobs"
    with pytest.raises(InvalidArgumentError):
        generate_dataset("spirals", params, seed=0)


def test_params_reject_unknown_kind():
    with pytest.raises(ValidationError):
        DatasetParams(kind="spirals")
    with pytest.raises(ValidationError):
        DatasetParams(colour="red")


def test_frame_columns():
    frame = gen_moons(n=10, seed=0).to_frame()
    assert list(frame.columns) == ["x1", "x2", "label"]
    assert len(frame) == 10
