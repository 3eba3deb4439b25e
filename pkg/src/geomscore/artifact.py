"""Canonical JSON persistence of RLT runs.

Artifacts are serialized with sorted keys and shortest round-trip float
representation, so identical runs produce byte-identical files (golden-file
friendly). The measured per-experiment timing is volatile by nature and is
therefore null unless explicitly requested at write time.
"""

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import FormatError, ParameterError
from .pipeline import ExperimentConfig, RltMatrix

FORMAT_VERSION = 1

MEAN_RECOMPUTE_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class LoadedArtifact:
    config: ExperimentConfig
    rlt: np.ndarray
    mrlt: np.ndarray
    overflow_mass: float
    dataset_fingerprint: str
    timing_mean_ms: float | None


def artifact_bytes(matrix: RltMatrix, include_timing: bool = False) -> bytes:
    doc = {
        "format_version": FORMAT_VERSION,
        "config": {
            "l0": matrix.config.l0,
            "gamma": float(matrix.config.gamma),
            "i_max": matrix.config.i_max,
            "n": matrix.config.n,
            "seed": matrix.config.seed,
        },
        "dataset_fingerprint": matrix.dataset_fingerprint,
        "rlt": [[float(x) for x in row] for row in matrix.values],
        "mrlt": [float(x) for x in np.mean(matrix.values, axis=0)],
        "overflow_mass": float(np.mean(matrix.overflow)),
        "timing_mean_ms": float(matrix.mean_experiment_ms) if include_timing else None,
    }
    return (json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n").encode()


def write_artifact(path, matrix: RltMatrix, include_timing: bool = False):
    with open(path, "wb") as f:
        f.write(artifact_bytes(matrix, include_timing=include_timing))


def load_artifact(path) -> LoadedArtifact:
    """Read an artifact back, rejecting version mismatches and stale means.

    Unknown top-level fields are ignored for forward compatibility.
    """
    try:
        with open(path, "rb") as f:
            doc = json.load(f)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(doc, dict):
        raise FormatError(f"{path}: artifact must be a JSON object")
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise FormatError(
            f"{path}: unsupported format_version {version!r}, expected {FORMAT_VERSION}"
        )
    try:
        cfg_doc = doc["config"]
        config = ExperimentConfig(
            l0=int(cfg_doc["l0"]),
            gamma=float(cfg_doc["gamma"]),
            i_max=int(cfg_doc["i_max"]),
            n=int(cfg_doc["n"]),
            seed=int(cfg_doc["seed"]),
        )
        rlt = np.asarray(doc["rlt"], dtype=np.float64)
        mrlt = np.asarray(doc["mrlt"], dtype=np.float64)
        overflow = float(doc["overflow_mass"])
        fingerprint = str(doc["dataset_fingerprint"])
    except (KeyError, TypeError, ValueError, ParameterError) as exc:
        raise FormatError(f"{path}: malformed artifact ({exc})") from exc
    if rlt.ndim != 2 or rlt.shape != (config.n, config.i_max):
        raise FormatError(
            f"{path}: rlt array has shape {rlt.shape}, expected {(config.n, config.i_max)}"
        )
    recomputed = np.mean(rlt, axis=0)
    if mrlt.shape != recomputed.shape or np.max(np.abs(mrlt - recomputed)) > MEAN_RECOMPUTE_TOL:
        raise FormatError(f"{path}: stored mrlt does not match the column mean of rlt")
    timing = doc.get("timing_mean_ms")
    if timing is not None:
        timing = float(timing)
        if not math.isfinite(timing):
            raise FormatError(f"{path}: non-finite timing_mean_ms")
    return LoadedArtifact(config, rlt, recomputed, overflow, fingerprint, timing)
