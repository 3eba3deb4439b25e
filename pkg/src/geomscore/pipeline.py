"""Randomized RLT experiments and dataset comparison.

Each experiment draws landmarks from its own counter-derived random
substream, so experiment i is reproducible in isolation and the full run is
bit-identical regardless of how many worker processes execute it.
"""

import time
import warnings
from dataclasses import dataclass, replace

import numpy as np

from .errors import ParameterError, RunCancelled
from .geometry import PointCloud, max_pairwise_distance, pairwise_distances, sample_landmarks
from .persistence import compute_persistence
from .rlt import MrltDistribution, RltVector, geometry_score, rlt_from_barcode
from .witness import build_witness_filtration

GAMMA_AUTO = "auto"


@dataclass(frozen=True)
class ExperimentConfig:
    """Knobs of one RLT run; defaults follow the suggested values for ~5000-point data."""

    l0: int = 64
    gamma: float | str = GAMMA_AUTO
    i_max: int = 100
    n: int = 10000
    seed: int = 0

    def __post_init__(self):
        if self.l0 < 3:
            raise ParameterError(f"l0 must be >= 3 (a triangle's worth), got {self.l0}")
        if self.n < 1:
            raise ParameterError(f"n must be >= 1, got {self.n}")
        if self.i_max < 1:
            raise ParameterError(f"i_max must be >= 1, got {self.i_max}")
        if isinstance(self.gamma, str):
            if self.gamma != GAMMA_AUTO:
                raise ParameterError(f"gamma must be a positive real or '{GAMMA_AUTO}'")
        elif not self.gamma > 0:
            raise ParameterError(f"gamma must be positive, got {self.gamma}")
        if not 0 <= int(self.seed) < 2**64:
            raise ParameterError("seed must fit an unsigned 64-bit integer")

    def resolve(self, n_samples: int) -> "ExperimentConfig":
        """Pin gamma for a concrete dataset size: auto means (1/128) * (5000/N)."""
        if self.gamma == GAMMA_AUTO:
            return replace(self, gamma=(1.0 / 128.0) * (5000.0 / n_samples))
        return self


@dataclass(eq=False)
class RltMatrix:
    """Per-experiment RLT rows (n x i_max) plus run provenance."""

    values: np.ndarray
    overflow: np.ndarray
    config: ExperimentConfig
    dataset_fingerprint: str
    degenerate_count: int
    mean_experiment_ms: float

    @property
    def rows(self) -> list:
        return [RltVector(v, float(o)) for v, o in zip(self.values, self.overflow)]

    def mean(self) -> MrltDistribution:
        return MrltDistribution(
            np.mean(self.values, axis=0), float(np.mean(self.overflow)), self.values.shape[0]
        )


def experiment_rng(seed: int, index: int) -> np.random.Generator:
    """Independent substream for one experiment, keyed on (seed, index)."""
    return np.random.default_rng(np.random.SeedSequence(entropy=(int(seed), int(index))))


def run_single_experiment(cloud: PointCloud, config: ExperimentConfig, index: int):
    """One landmark draw end to end; returns (rlt values, overflow, degenerate flag).

    config.gamma must already be numeric (see ExperimentConfig.resolve).
    A degenerate draw (all landmarks coincide, so the sweep has zero width)
    yields the point-topology answer [1, 0, ...] rather than failing the run.
    """
    if isinstance(config.gamma, str):
        raise ParameterError("gamma is unresolved; call config.resolve(n_samples) first")
    rng = experiment_rng(config.seed, index)
    landmarks = sample_landmarks(cloud, config.l0, rng)
    spread = max_pairwise_distance(landmarks, cloud)
    alpha_max = config.gamma * spread
    if alpha_max <= 0.0:
        values = np.zeros(config.i_max)
        values[0] = 1.0
        return values, 0.0, True
    dist = pairwise_distances(landmarks, cloud)
    filtration = build_witness_filtration(dist, alpha_max, max_dim=2)
    barcode = compute_persistence(filtration, max_hom_dim=1)
    r = rlt_from_barcode(barcode, config.i_max)
    return r.values, r.overflow_mass, False


def run_rlt_experiments(
    cloud: PointCloud,
    config: ExperimentConfig,
    workers: int = 1,
    progress=None,
    cancel=None,
) -> RltMatrix:
    """Run config.n independent experiments and stack their RLT rows.

    workers > 1 runs experiments in parallel processes; rows are collected by
    experiment index so the result is bit-identical for any worker count.
    progress (if given) is called with (completed, total) after each
    experiment; cancel.is_set() is honored between experiments.
    """
    if cloud.n_samples < config.l0:
        raise ParameterError(
            f"dataset has {cloud.n_samples} samples, fewer than l0={config.l0} landmarks"
        )
    cfg = config.resolve(cloud.n_samples)
    n = cfg.n
    values = np.empty((n, cfg.i_max))
    overflow = np.empty(n)
    degenerate = 0
    t0 = time.perf_counter()

    if workers <= 1:
        for i in range(n):
            _check_cancel(cancel)
            row, ovf, degen = run_single_experiment(cloud, cfg, i)
            values[i] = row
            overflow[i] = ovf
            degenerate += degen
            if progress is not None:
                progress(i + 1, n)
    else:
        degenerate = _run_parallel(cloud, cfg, workers, values, overflow, progress, cancel)

    mean_ms = (time.perf_counter() - t0) * 1000.0 / n
    return RltMatrix(values, overflow, cfg, cloud.fingerprint(), degenerate, mean_ms)


def compare_datasets(
    a: PointCloud, b: PointCloud, config: ExperimentConfig, workers: int = 1
) -> float:
    """Geometry score between two datasets under one shared configuration.

    With gamma='auto' each dataset resolves gamma from its own size; equal
    sizes are recommended for comparability and a mismatch only warns.
    """
    if a.n_samples != b.n_samples:
        warnings.warn(
            f"comparing datasets of different sizes ({a.n_samples} vs {b.n_samples}); "
            "equal sizes give more comparable scores",
            stacklevel=2,
        )
    mrlt_a = run_rlt_experiments(a, config, workers=workers).mean()
    mrlt_b = run_rlt_experiments(b, config, workers=workers).mean()
    return geometry_score(mrlt_a, mrlt_b)


def _check_cancel(cancel):
    if cancel is not None and cancel.is_set():
        raise RunCancelled("experiment run cancelled")


_WORKER_STATE: dict = {}


def _init_worker(data: np.ndarray, config: ExperimentConfig):
    # keep worker BLAS single-threaded; parallelism lives across experiments
    try:
        from threadpoolctl import threadpool_limits

        threadpool_limits(limits=1)
    except ImportError:
        pass
    _WORKER_STATE["cloud"] = PointCloud(data)
    _WORKER_STATE["config"] = config


def _worker(index: int):
    row, ovf, degen = run_single_experiment(
        _WORKER_STATE["cloud"], _WORKER_STATE["config"], index
    )
    return index, row, ovf, degen


def _run_parallel(cloud, cfg, workers, values, overflow, progress, cancel) -> int:
    import multiprocessing as mp

    try:
        ctx = mp.get_context("fork")
    except ValueError:  # pragma: no cover - non-forking platforms
        ctx = mp.get_context()
    n = cfg.n
    degenerate = 0
    chunksize = max(1, min(32, n // (workers * 4) or 1))
    with ctx.Pool(workers, initializer=_init_worker, initargs=(cloud.data, cfg)) as pool:
        completed = 0
        for index, row, ovf, degen in pool.imap_unordered(_worker, range(n), chunksize):
            values[index] = row
            overflow[index] = ovf
            degenerate += degen
            completed += 1
            if progress is not None:
                progress(completed, n)
            if cancel is not None and cancel.is_set():
                pool.terminate()
                raise RunCancelled("experiment run cancelled")
    return degenerate
