"""Synthetic point-cloud generators and CSV/NPY loading and saving.

The synthetic shapes cover the hole counts 0, 1 and 2 (disk, circle, pair
of circles) plus a flat high-dimensional subspace, which is what the
recovery experiments need.
"""

import csv
from dataclasses import dataclass

import numpy as np

from .errors import FormatError, InputValidationError, ParameterError
from .geometry import PointCloud

SHAPES = ("circle", "filled_disk", "two_circles", "noisy_circle", "hyperplane")
FORMATS = ("csv", "npy")

# radial noise that keeps the circle's topology but visibly thickens it
NOISY_CIRCLE_DEFAULT_SIGMA = 0.05


@dataclass(frozen=True)
class SyntheticSpec:
    """Recipe for a generated dataset; deterministic given the seed.

    noise_sigma None picks the shape default (0 everywhere except the noisy
    circle). ambient_dim/intrinsic_dim apply to the hyperplane only.
    """

    shape: str
    n_points: int
    noise_sigma: float | None = None
    ambient_dim: int | None = None
    intrinsic_dim: int | None = None
    seed: int = 0

    def __post_init__(self):
        if self.shape not in SHAPES:
            raise ParameterError(f"unknown shape {self.shape!r}; choose from {SHAPES}")
        if self.n_points < 1:
            raise ParameterError(f"n_points must be >= 1, got {self.n_points}")
        if self.noise_sigma is not None and self.noise_sigma < 0:
            raise ParameterError(f"noise_sigma must be >= 0, got {self.noise_sigma}")
        if self.shape == "hyperplane":
            if self.ambient_dim is None or self.intrinsic_dim is None:
                raise ParameterError("hyperplane needs ambient_dim and intrinsic_dim")
            if not 1 <= self.intrinsic_dim <= self.ambient_dim:
                raise ParameterError(
                    f"need 1 <= intrinsic_dim <= ambient_dim, got "
                    f"{self.intrinsic_dim} > {self.ambient_dim}"
                )
        elif self.ambient_dim is not None or self.intrinsic_dim is not None:
            raise ParameterError(f"ambient_dim/intrinsic_dim only apply to hyperplane, not {self.shape}")

    @property
    def sigma(self) -> float:
        if self.noise_sigma is not None:
            return float(self.noise_sigma)
        return NOISY_CIRCLE_DEFAULT_SIGMA if self.shape == "noisy_circle" else 0.0


def generate_synthetic(spec: SyntheticSpec) -> PointCloud:
    """Sample the requested shape; additive per-coordinate Gaussian noise."""
    rng = np.random.default_rng(np.random.SeedSequence(entropy=int(spec.seed)))
    n = spec.n_points
    if spec.shape in ("circle", "noisy_circle"):
        theta = rng.uniform(0.0, 2.0 * np.pi, n)
        pts = np.column_stack([np.cos(theta), np.sin(theta)])
    elif spec.shape == "filled_disk":
        theta = rng.uniform(0.0, 2.0 * np.pi, n)
        radius = np.sqrt(rng.uniform(0.0, 1.0, n))  # area-uniform
        pts = np.column_stack([radius * np.cos(theta), radius * np.sin(theta)])
    elif spec.shape == "two_circles":
        theta = rng.uniform(0.0, 2.0 * np.pi, n)
        pts = np.column_stack([np.cos(theta), np.sin(theta)])
        pts[n // 2:, 0] += 4.0  # disjoint unit circles, centers 4 apart
    else:  # hyperplane
        # the embedding map is drawn first so it is fixed per seed for any n
        basis = rng.normal(size=(spec.intrinsic_dim, spec.ambient_dim))
        z = rng.uniform(0.0, 1.0, size=(n, spec.intrinsic_dim))
        pts = z @ basis
    if spec.sigma > 0:
        pts = pts + rng.normal(0.0, spec.sigma, size=pts.shape)
    return PointCloud(pts)


def load_pointcloud(path, format: str) -> PointCloud:
    """Read a point cloud from a CSV or NPY file, validating as it goes."""
    if format == "csv":
        return _load_csv(path)
    if format == "npy":
        return _load_npy(path)
    raise ParameterError(f"unknown format {format!r}; choose from {FORMATS}")


def save_pointcloud(cloud: PointCloud, path, format: str):
    """Write a cloud so that loading it back is value-identical."""
    if format == "csv":
        with open(path, "w", newline="") as f:
            for row in cloud.data:
                f.write(",".join(repr(float(x)) for x in row))
                f.write("\n")
    elif format == "npy":
        with open(path, "wb") as f:
            np.save(f, cloud.data)
    else:
        raise ParameterError(f"unknown format {format!r}; choose from {FORMATS}")


def _load_csv(path) -> PointCloud:
    rows = []
    width = None
    with open(path, newline="") as f:
        reader = csv.reader(f)
        for lineno, record in enumerate(reader, start=1):
            parsed = _parse_record(record)
            if parsed is None:
                if lineno == 1:
                    continue  # auto-detected header row
                if not record:
                    raise FormatError(f"{path}: row {lineno} is empty")
                bad = next(i for i, cell in enumerate(record) if not _is_number(cell))
                raise FormatError(f"{path}: row {lineno}, column {bad + 1}: not numeric")
            if width is None:
                width = len(parsed)
            elif len(parsed) != width:
                raise FormatError(
                    f"{path}: row {lineno} has {len(parsed)} fields, expected {width}"
                )
            for col, value in enumerate(parsed):
                if not np.isfinite(value):
                    raise InputValidationError(
                        f"{path}: row {lineno}, column {col + 1}: non-finite value"
                    )
            rows.append(parsed)
    if not rows:
        raise FormatError(f"{path}: no data rows")
    return PointCloud(np.array(rows, dtype=np.float64))


def _parse_record(record):
    if not record:
        return None
    out = []
    for cell in record:
        try:
            out.append(float(cell))
        except ValueError:
            return None
    return out


def _is_number(cell: str) -> bool:
    try:
        float(cell)
    except ValueError:
        return False
    return True


def _load_npy(path) -> PointCloud:
    try:
        arr = np.load(path, allow_pickle=False)
    except (ValueError, OSError, EOFError) as exc:
        raise FormatError(f"{path}: not a readable NPY file ({exc})") from exc
    if arr.dtype not in (np.float32, np.float64):
        raise FormatError(f"{path}: unsupported dtype {arr.dtype}; need float32 or float64")
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    elif arr.ndim != 2:
        raise FormatError(f"{path}: unsupported shape {arr.shape}; need 1-D or 2-D")
    if not np.all(np.isfinite(arr)):
        raise InputValidationError(f"{path}: array contains non-finite values")
    return PointCloud(arr)
