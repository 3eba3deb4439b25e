"""Point clouds, uniform landmark sampling and dense Euclidean distances.

This is the O(N * D * L0) kernel of the whole pipeline: everything downstream
consumes the landmark-to-witness distance matrix produced here.
"""

import hashlib
from dataclasses import dataclass

import numpy as np

from .errors import InputValidationError, ParameterError


@dataclass(frozen=True, eq=False)
class PointCloud:
    """N samples in D-dimensional Euclidean space, stored row-major.

    Input may be float32 or float64 (or any real dtype); internal storage is
    always a C-contiguous float64 copy, since downstream pairing is sensitive
    to ties created by low precision.
    """

    data: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.data)
        if arr.ndim != 2:
            raise InputValidationError(
                f"point cloud must be 2-D (samples x features), got ndim={arr.ndim}"
            )
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise InputValidationError(f"point cloud must be non-empty, got shape {arr.shape}")
        if arr.dtype == np.bool_ or not (
            np.issubdtype(arr.dtype, np.floating) or np.issubdtype(arr.dtype, np.integer)
        ):
            raise InputValidationError(f"point cloud entries must be real scalars, got dtype {arr.dtype}")
        arr = np.ascontiguousarray(arr, dtype=np.float64)
        if not np.all(np.isfinite(arr)):
            raise InputValidationError("point cloud contains non-finite entries (NaN or Inf)")
        arr.setflags(write=False)
        object.__setattr__(self, "data", arr)

    @property
    def n_samples(self) -> int:
        return self.data.shape[0]

    @property
    def dim(self) -> int:
        return self.data.shape[1]

    def fingerprint(self) -> str:
        """SHA-256 over shape and raw float64 bytes; stable content identity."""
        h = hashlib.sha256()
        h.update(f"{self.n_samples}x{self.dim}:".encode())
        h.update(self.data.tobytes())
        return h.hexdigest()


@dataclass(frozen=True, eq=False)
class LandmarkSet:
    """Distinct row indices into a parent :class:`PointCloud`."""

    indices: np.ndarray

    def __post_init__(self):
        idx = np.asarray(self.indices, dtype=np.int64)
        if idx.ndim != 1 or idx.size < 1:
            raise ParameterError("landmark indices must be a non-empty 1-D sequence")
        if len(np.unique(idx)) != idx.size:
            raise ParameterError("landmark indices must be distinct")
        if np.any(idx < 0):
            raise ParameterError("landmark indices must be non-negative")
        idx.setflags(write=False)
        object.__setattr__(self, "indices", idx)

    def __len__(self) -> int:
        return int(self.indices.size)


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """Euclidean distances, shape (n_landmarks, n_witnesses).

    Entry [l, w] is the distance from landmark l to witness (sample) w.
    """

    values: np.ndarray

    def __post_init__(self):
        arr = np.ascontiguousarray(self.values, dtype=np.float64)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise InputValidationError(f"distance matrix must be non-empty 2-D, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)) or np.any(arr < 0):
            raise InputValidationError("distance matrix entries must be finite and non-negative")
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    @property
    def n_landmarks(self) -> int:
        return self.values.shape[0]

    @property
    def n_witnesses(self) -> int:
        return self.values.shape[1]


def _distance_kernel(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Dense Euclidean distances via ||x||^2 + ||y||^2 - 2<x,y>, clamped at 0."""
    aa = np.einsum("ij,ij->i", a, a)
    bb = np.einsum("ij,ij->i", b, b)
    sq = aa[:, None] + bb[None, :]
    sq -= 2.0 * (a @ b.T)
    np.maximum(sq, 0.0, out=sq)
    return np.sqrt(sq, out=sq)


def pairwise_distances(landmarks: LandmarkSet, cloud: PointCloud) -> DistanceMatrix:
    """Distance matrix from every landmark to every sample of the cloud.

    Cost is Theta(N * D * L0). The entry for a landmark against its own row
    is set to exactly 0 (the cancellation trick alone only gets close).
    """
    idx = _check_indices(landmarks, cloud)
    d = _distance_kernel(cloud.data[idx], cloud.data)
    d[np.arange(idx.size), idx] = 0.0
    return DistanceMatrix(d)


def sample_landmarks(cloud: PointCloud, l0: int, rng: np.random.Generator) -> LandmarkSet:
    """Uniform sample of l0 distinct row indices, without replacement.

    Partial Fisher-Yates over a virtual index array: O(l0) extra memory,
    exactly uniform, deterministic given the generator state.
    """
    n = cloud.n_samples
    if not 1 <= l0 <= n:
        raise ParameterError(f"need 1 <= l0 <= n_samples, got l0={l0} for {n} samples")
    draws = rng.integers(low=np.arange(l0), high=n)
    swapped: dict[int, int] = {}
    out = np.empty(l0, dtype=np.int64)
    for i, j in enumerate(draws.tolist()):
        vi = swapped.get(i, i)
        out[i] = swapped.get(j, j)
        swapped[j] = vi
    return LandmarkSet(out)


def max_pairwise_distance(landmarks: LandmarkSet, cloud: PointCloud) -> float:
    """Largest Euclidean distance between any two landmarks (0 if degenerate)."""
    idx = _check_indices(landmarks, cloud)
    if idx.size == 1:
        return 0.0
    rows = cloud.data[idx]
    return float(_distance_kernel(rows, rows).max())


def _check_indices(landmarks: LandmarkSet, cloud: PointCloud) -> np.ndarray:
    idx = landmarks.indices
    if np.any(idx >= cloud.n_samples):
        raise ParameterError(
            f"landmark index out of range for cloud with {cloud.n_samples} samples"
        )
    return idx
