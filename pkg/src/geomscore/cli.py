"""Command-line interface: rlt, score, synth and plot subcommands.

Exit codes: 0 success, 2 argument errors, 3 input-format errors, 4 pipeline
errors. Diagnostics and progress go to standard error; only the score value
is printed to standard output.
"""

import argparse
import sys
from pathlib import Path

from .artifact import load_artifact, write_artifact
from .datasets import FORMATS, SHAPES, SyntheticSpec, generate_synthetic, load_pointcloud, save_pointcloud
from .errors import (
    FormatError,
    GeomscoreError,
    InputValidationError,
    ParameterError,
)
from .pipeline import ExperimentConfig, run_rlt_experiments
from .rlt import MrltDistribution, geometry_score
from .svgplot import render_mrlt_chart

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_PIPELINE = 4


def entry():
    sys.exit(main())


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FormatError, InputValidationError, FileNotFoundError, IsADirectoryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GeomscoreError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PIPELINE


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geomscore",
        description="Estimate hole counts of a dataset's underlying manifold and "
        "compare datasets by their mean relative living time distributions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_rlt = sub.add_parser("rlt", help="run RLT experiments on a dataset and write a JSON artifact")
    p_rlt.add_argument("--input", required=True, help="dataset file")
    p_rlt.add_argument("--format", required=True, choices=FORMATS)
    _add_config_flags(p_rlt)
    p_rlt.add_argument("--out", required=True, help="artifact JSON path")
    p_rlt.add_argument("--threads", type=int, default=1, help="parallel worker count")
    p_rlt.add_argument("--timing", action="store_true", help="embed measured per-experiment timing (breaks byte determinism)")
    p_rlt.add_argument("--progress", action="store_true", help="report progress on stderr")
    p_rlt.set_defaults(func=_cmd_rlt)

    p_score = sub.add_parser("score", help="geometry score between two datasets or two artifacts")
    p_score.add_argument("inputs", nargs=2, help="two dataset files, or two artifact .json files")
    p_score.add_argument("--format", choices=FORMATS, help="dataset format (dataset mode)")
    _add_config_flags(p_score)
    p_score.add_argument("--out", help="optional JSON report path")
    p_score.add_argument("--threads", type=int, default=1)
    p_score.add_argument("--progress", action="store_true")
    p_score.set_defaults(func=_cmd_score)

    p_synth = sub.add_parser("synth", help="generate a synthetic dataset")
    p_synth.add_argument("--shape", required=True, choices=SHAPES)
    p_synth.add_argument("--n", required=True, type=int)
    p_synth.add_argument("--noise", type=float, default=None)
    p_synth.add_argument("--ambient-dim", type=int, default=None)
    p_synth.add_argument("--intrinsic-dim", type=int, default=None)
    p_synth.add_argument("--seed", type=int, default=0)
    p_synth.add_argument("--out", required=True)
    p_synth.add_argument("--format", required=True, choices=FORMATS)
    p_synth.set_defaults(func=_cmd_synth)

    p_plot = sub.add_parser("plot", help="render artifact MRLTs as an SVG bar chart")
    p_plot.add_argument("artifacts", nargs="+", help="artifact JSON paths")
    p_plot.add_argument("--out", required=True, help="SVG output path")
    p_plot.add_argument("--labels", help="comma-separated series labels")
    p_plot.set_defaults(func=_cmd_plot)
    return parser


def _add_config_flags(parser):
    parser.add_argument("--landmarks", type=int, default=64)
    parser.add_argument("--gamma", type=_parse_gamma, default="auto", help="'auto' or a positive real")
    parser.add_argument("--imax", type=int, default=100)
    parser.add_argument("--experiments", type=int, default=10000)
    parser.add_argument("--seed", type=int, default=0)


def _parse_gamma(text: str):
    if text == "auto":
        return "auto"
    try:
        return float(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"gamma must be 'auto' or a real, got {text!r}") from exc


def _config_from_args(args) -> ExperimentConfig:
    return ExperimentConfig(
        l0=args.landmarks,
        gamma=args.gamma,
        i_max=args.imax,
        n=args.experiments,
        seed=args.seed,
    )


def _progress_printer(enabled: bool, label: str):
    if not enabled:
        return None
    def report(done: int, total: int):
        step = max(1, total // 20)
        if done % step == 0 or done == total:
            print(f"{label}: {done}/{total} experiments", file=sys.stderr)
    return report


def _cmd_rlt(args) -> int:
    config = _config_from_args(args)
    cloud = load_pointcloud(args.input, args.format)
    matrix = run_rlt_experiments(
        cloud,
        config,
        workers=args.threads,
        progress=_progress_printer(args.progress, args.input),
    )
    write_artifact(args.out, matrix, include_timing=args.timing)
    return EXIT_OK


def _cmd_score(args) -> int:
    a_path, b_path = args.inputs
    json_mode = [Path(p).suffix.lower() == ".json" for p in (a_path, b_path)]
    if all(json_mode):
        mrlt_a, mrlt_b = _load_score_inputs(a_path, b_path)
    elif any(json_mode):
        raise ParameterError("mix of artifact (.json) and dataset inputs; give two of the same kind")
    else:
        if not args.format:
            raise ParameterError("--format is required when scoring datasets")
        config = _config_from_args(args)
        clouds = [load_pointcloud(path, args.format) for path in (a_path, b_path)]
        if clouds[0].n_samples != clouds[1].n_samples:
            print(
                f"warning: datasets differ in size ({clouds[0].n_samples} vs "
                f"{clouds[1].n_samples}); equal sizes give more comparable scores",
                file=sys.stderr,
            )
        mrlts = []
        for path, cloud in zip((a_path, b_path), clouds):
            matrix = run_rlt_experiments(
                cloud,
                config,
                workers=args.threads,
                progress=_progress_printer(args.progress, path),
            )
            mrlts.append(matrix.mean())
        mrlt_a, mrlt_b = mrlts
    score = geometry_score(mrlt_a, mrlt_b)
    print(f"{score:.16e}")
    if args.out:
        _write_score_report(args.out, mrlt_a, mrlt_b, score)
    return EXIT_OK


def _load_score_inputs(a_path, b_path):
    art_a = load_artifact(a_path)
    art_b = load_artifact(b_path)
    if art_a.config.i_max != art_b.config.i_max:
        raise ParameterError(
            f"artifacts have incompatible i_max: {art_a.config.i_max} vs {art_b.config.i_max}"
        )
    if art_a.config.n != art_b.config.n:
        print(
            f"warning: artifacts ran different experiment counts "
            f"({art_a.config.n} vs {art_b.config.n})",
            file=sys.stderr,
        )
    if art_a.config.gamma != art_b.config.gamma:
        print(
            f"warning: artifacts used different gamma "
            f"({art_a.config.gamma} vs {art_b.config.gamma})",
            file=sys.stderr,
        )
    to_dist = lambda art: MrltDistribution(art.mrlt, art.overflow_mass, art.config.n)
    return to_dist(art_a), to_dist(art_b)


def _write_score_report(path, mrlt_a: MrltDistribution, mrlt_b: MrltDistribution, score: float):
    import json

    doc = {
        "format_version": 1,
        "mrlt_a": [float(x) for x in mrlt_a.values],
        "mrlt_b": [float(x) for x in mrlt_b.values],
        "score": score,
        "score_x1000": score * 1000.0,
    }
    with open(path, "w") as f:
        json.dump(doc, f, sort_keys=True, separators=(",", ":"))
        f.write("\n")


def _cmd_synth(args) -> int:
    spec = SyntheticSpec(
        shape=args.shape,
        n_points=args.n,
        noise_sigma=args.noise,
        ambient_dim=args.ambient_dim,
        intrinsic_dim=args.intrinsic_dim,
        seed=args.seed,
    )
    cloud = generate_synthetic(spec)
    save_pointcloud(cloud, args.out, args.format)
    return EXIT_OK


def _cmd_plot(args) -> int:
    arts = [load_artifact(p) for p in args.artifacts]
    if args.labels:
        labels = [s.strip() for s in args.labels.split(",")]
        if len(labels) != len(arts):
            raise ParameterError(f"{len(labels)} labels for {len(arts)} artifacts")
    else:
        labels = [Path(p).stem for p in args.artifacts]
    svg = render_mrlt_chart([a.mrlt for a in arts], labels)
    with open(args.out, "w") as f:
        f.write(svg)
    return EXIT_OK
