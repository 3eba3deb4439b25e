"""Which candidate dataset is topologically closest to a reference?

The geometry score between two datasets is the squared L2 distance between
their mean living-time distributions: near zero when the underlying shapes
carry the same holes, and up to 2 when the distributions are disjoint.
Here the reference is a clean circle, and the candidates are a noisy copy,
a filled disk, and a pair of circles. The noisy copy should win by orders
of magnitude, even though its coordinates differ everywhere.
"""

from geomscore import (
    ExperimentConfig,
    SyntheticSpec,
    generate_synthetic,
    run_rlt_experiments,
    geometry_score,
)

N_POINTS = 2000
CONFIG = ExperimentConfig(l0=32, gamma=0.125, i_max=5, n=200, seed=3)


def mean_distribution(shape, sigma=None):
    cloud = generate_synthetic(SyntheticSpec(shape, N_POINTS, noise_sigma=sigma, seed=11))
    return run_rlt_experiments(cloud, CONFIG, workers=2).mean()


def main():
    reference = mean_distribution("circle", sigma=0.0)
    candidates = {
        "noisy_circle": mean_distribution("noisy_circle"),
        "filled_disk": mean_distribution("filled_disk"),
        "two_circles": mean_distribution("two_circles"),
    }
    print("geometry score against the clean circle (smaller = more similar):\n")
    ranked = sorted(candidates.items(), key=lambda kv: geometry_score(reference, kv[1]))
    for name, mrlt in ranked:
        print(f"  {name:<14} {geometry_score(reference, mrlt):.3e}")
    best = ranked[0][0]
    print(f"\nclosest match: {best}")
    print("note: the score only sees topology; a noisy circle and a clean one")
    print("look alike here even though no two points coincide.")


if __name__ == "__main__":
    main()
