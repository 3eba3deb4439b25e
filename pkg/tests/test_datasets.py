import struct

import numpy as np
import pytest

from geomscore import (
    FormatError,
    InputValidationError,
    ParameterError,
    SyntheticSpec,
    generate_synthetic,
    load_pointcloud,
    save_pointcloud,
)


def test_noiseless_circle_has_unit_norms():
    cloud = generate_synthetic(SyntheticSpec("circle", 500, seed=1))
    norms = np.linalg.norm(cloud.data, axis=1)
    assert np.abs(norms - 1.0).max() <= 1e-12


def test_noisy_circle_defaults_to_thickened_ring():
    cloud = generate_synthetic(SyntheticSpec("noisy_circle", 2000, seed=1))
    norms = np.linalg.norm(cloud.data, axis=1)
    spread = norms.std()
    assert 0.01 < spread < 0.2
    explicit = generate_synthetic(SyntheticSpec("noisy_circle", 2000, noise_sigma=0.0, seed=1))
    assert np.abs(np.linalg.norm(explicit.data, axis=1) - 1.0).max() <= 1e-12


def test_filled_disk_is_area_uniform():
    cloud = generate_synthetic(SyntheticSpec("filled_disk", 20000, seed=2))
    radii = np.linalg.norm(cloud.data, axis=1)
    assert radii.max() <= 1.0 + 1e-12
    # area-uniform sampling puts a quarter of the mass inside r = 1/2
    inside = np.mean(radii <= 0.5)
    assert abs(inside - 0.25) < 0.02


def test_two_circles_split_and_separation():
    cloud = generate_synthetic(SyntheticSpec("two_circles", 1000, seed=3))
    left = cloud.data[cloud.data[:, 0] < 2.0]
    right = cloud.data[cloud.data[:, 0] >= 2.0]
    assert len(left) == len(right) == 500
    assert np.abs(np.linalg.norm(left, axis=1) - 1.0).max() <= 1e-12
    assert np.abs(np.linalg.norm(right - [4.0, 0.0], axis=1) - 1.0).max() <= 1e-12


def test_hyperplane_has_intrinsic_rank():
    cloud = generate_synthetic(
        SyntheticSpec("hyperplane", 300, ambient_dim=784, intrinsic_dim=32, seed=4)
    )
    assert cloud.data.shape == (300, 784)
    assert np.linalg.matrix_rank(cloud.data) == 32


def test_hyperplane_map_is_fixed_per_seed():
    small = generate_synthetic(
        SyntheticSpec("hyperplane", 10, ambient_dim=20, intrinsic_dim=3, seed=5)
    )
    big = generate_synthetic(
        SyntheticSpec("hyperplane", 50, ambient_dim=20, intrinsic_dim=3, seed=5)
    )
    # same seed, different n: both land on the same 3-dimensional subspace
    stacked = np.vstack([small.data, big.data])
    assert np.linalg.matrix_rank(stacked) == 3


def test_generation_is_deterministic_and_finite():
    for shape in ("circle", "filled_disk", "two_circles", "noisy_circle"):
        a = generate_synthetic(SyntheticSpec(shape, 64, seed=11))
        b = generate_synthetic(SyntheticSpec(shape, 64, seed=11))
        assert np.array_equal(a.data, b.data)
        assert np.all(np.isfinite(a.data))


def test_spec_validation():
    with pytest.raises(ParameterError):
        SyntheticSpec("torus", 10)
    with pytest.raises(ParameterError):
        SyntheticSpec("circle", 0)
    with pytest.raises(ParameterError):
        SyntheticSpec("circle", 10, noise_sigma=-0.1)
    with pytest.raises(ParameterError):
        SyntheticSpec("hyperplane", 10)
    with pytest.raises(ParameterError):
        SyntheticSpec("hyperplane", 10, ambient_dim=4, intrinsic_dim=9)
    with pytest.raises(ParameterError):
        SyntheticSpec("circle", 10, ambient_dim=4)


def test_csv_parse_basic(tmp_path):
    path = tmp_path / "cloud.csv"
    path.write_text("0,0\n3,4\n")
    cloud = load_pointcloud(path, "csv")
    assert cloud.data.tolist() == [[0.0, 0.0], [3.0, 4.0]]


def test_csv_header_autodetected(tmp_path):
    path = tmp_path / "cloud.csv"
    path.write_text("x,y\n1.5,2.5\n-1,0.25\n")
    cloud = load_pointcloud(path, "csv")
    assert cloud.data.tolist() == [[1.5, 2.5], [-1.0, 0.25]]


def test_csv_rejects_nan(tmp_path):
    path = tmp_path / "cloud.csv"
    path.write_text("1,2\n3,nan\n")
    with pytest.raises(InputValidationError, match="row 2"):
        load_pointcloud(path, "csv")


def test_csv_rejects_ragged(tmp_path):
    path = tmp_path / "cloud.csv"
    path.write_text("1,2\n3,4,5\n")
    with pytest.raises(FormatError, match="row 2"):
        load_pointcloud(path, "csv")


def test_csv_rejects_non_numeric_with_location(tmp_path):
    path = tmp_path / "cloud.csv"
    path.write_text("1,2\n3,apple\n")
    with pytest.raises(FormatError, match="row 2, column 2"):
        load_pointcloud(path, "csv")


def test_csv_rejects_empty(tmp_path):
    path = tmp_path / "cloud.csv"
    path.write_text("")
    with pytest.raises(FormatError):
        load_pointcloud(path, "csv")


def write_npy_v1_by_hand(path, array):
    """Independent NPY v1.0 writer: magic, padded header dict, C-order payload."""
    shape = "(" + ", ".join(str(n) for n in array.shape) + ")"
    header = "{'descr': '<f8', 'fortran_order': False, 'shape': %s, }" % shape
    pad = 64 - (10 + len(header) + 1) % 64
    header = header + " " * pad + "\n"
    with open(path, "wb") as f:
        f.write(b"\x93NUMPY")
        f.write(bytes([1, 0]))
        f.write(struct.pack("<H", len(header)))
        f.write(header.encode("latin1"))
        for value in array.reshape(-1):
            f.write(struct.pack("<d", value))


def test_npy_golden_file_round_trip(tmp_path):
    values = np.arange(15, dtype=np.float64).reshape(5, 3) / 7.0
    path = tmp_path / "golden.npy"
    write_npy_v1_by_hand(path, values)
    cloud = load_pointcloud(path, "npy")
    assert np.array_equal(cloud.data, values)


def test_npy_one_dimensional_becomes_column(tmp_path):
    path = tmp_path / "vec.npy"
    with open(path, "wb") as f:
        np.save(f, np.array([1.0, 2.0, 3.0]))
    cloud = load_pointcloud(path, "npy")
    assert cloud.data.shape == (3, 1)


def test_npy_rejects_bad_dtype_and_shape(tmp_path):
    path = tmp_path / "bad.npy"
    with open(path, "wb") as f:
        np.save(f, np.arange(6, dtype=np.int64))
    with pytest.raises(FormatError, match="dtype"):
        load_pointcloud(path, "npy")
    with open(path, "wb") as f:
        np.save(f, np.zeros((2, 2, 2)))
    with pytest.raises(FormatError, match="shape"):
        load_pointcloud(path, "npy")
    path.write_bytes(b"not an npy file")
    with pytest.raises(FormatError):
        load_pointcloud(path, "npy")


def test_npy_rejects_non_finite(tmp_path):
    path = tmp_path / "nan.npy"
    with open(path, "wb") as f:
        np.save(f, np.array([[1.0, np.nan]]))
    with pytest.raises(InputValidationError):
        load_pointcloud(path, "npy")


@pytest.mark.parametrize("format", ["csv", "npy"])
def test_round_trip_value_identical(tmp_path, format):
    cloud = generate_synthetic(SyntheticSpec("noisy_circle", 40, seed=6))
    path = tmp_path / f"cloud.{format}"
    save_pointcloud(cloud, path, format)
    again = load_pointcloud(path, format)
    assert np.array_equal(cloud.data, again.data)


def test_npy_save_respects_exact_path(tmp_path):
    cloud = generate_synthetic(SyntheticSpec("circle", 5, seed=0))
    path = tmp_path / "exact_name.data"
    save_pointcloud(cloud, path, "npy")
    assert path.exists()
    assert np.array_equal(load_pointcloud(path, "npy").data, cloud.data)


def test_unknown_format_rejected(tmp_path):
    cloud = generate_synthetic(SyntheticSpec("circle", 5, seed=0))
    with pytest.raises(ParameterError):
        save_pointcloud(cloud, tmp_path / "x", "parquet")
    with pytest.raises(ParameterError):
        load_pointcloud(tmp_path / "x", "parquet")
