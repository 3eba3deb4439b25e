"""Topology estimation for point clouds via randomized witness-complex
persistence, and the geometry score for comparing datasets."""

from .artifact import LoadedArtifact, load_artifact, write_artifact
from .datasets import (
    SHAPES,
    SyntheticSpec,
    generate_synthetic,
    load_pointcloud,
    save_pointcloud,
)
from .errors import (
    FormatError,
    GeomscoreError,
    InputValidationError,
    InternalConsistencyError,
    ParameterError,
    RunCancelled,
)
from .geometry import (
    DistanceMatrix,
    LandmarkSet,
    PointCloud,
    max_pairwise_distance,
    pairwise_distances,
    sample_landmarks,
)
from .persistence import Barcode, PersistenceInterval, compute_persistence
from .pipeline import (
    ExperimentConfig,
    RltMatrix,
    compare_datasets,
    experiment_rng,
    run_rlt_experiments,
    run_single_experiment,
)
from .rlt import (
    MrltDistribution,
    RltVector,
    betti_count,
    geometry_score,
    map_betti,
    mean_rlt,
    rlt_from_barcode,
)
from .svgplot import render_mrlt_chart
from .witness import FilteredSimplex, WitnessFiltration, build_witness_filtration

__version__ = "0.1.0"

__all__ = [
    "Barcode",
    "DistanceMatrix",
    "ExperimentConfig",
    "FilteredSimplex",
    "FormatError",
    "GeomscoreError",
    "InputValidationError",
    "InternalConsistencyError",
    "LandmarkSet",
    "LoadedArtifact",
    "MrltDistribution",
    "ParameterError",
    "PersistenceInterval",
    "PointCloud",
    "RltMatrix",
    "RltVector",
    "RunCancelled",
    "SHAPES",
    "SyntheticSpec",
    "WitnessFiltration",
    "betti_count",
    "build_witness_filtration",
    "compare_datasets",
    "compute_persistence",
    "experiment_rng",
    "generate_synthetic",
    "geometry_score",
    "load_artifact",
    "load_pointcloud",
    "map_betti",
    "max_pairwise_distance",
    "mean_rlt",
    "pairwise_distances",
    "render_mrlt_chart",
    "rlt_from_barcode",
    "run_rlt_experiments",
    "run_single_experiment",
    "sample_landmarks",
    "save_pointcloud",
    "write_artifact",
]
