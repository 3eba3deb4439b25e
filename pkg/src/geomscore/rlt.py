"""Relative living times, their means, and the geometry score.

The relative living time of hole count i is the fraction of the sweep
[0, alpha_max] during which the first Betti number equals i. Averaged over
many landmark draws these fractions form a probability distribution over
hole counts; two datasets are compared by the squared L2 distance between
their mean distributions.
"""

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError
from .persistence import Barcode

OVERFLOW_WARN_THRESHOLD = 0.01


@dataclass(frozen=True, eq=False)
class RltVector:
    """Living-time fractions for hole counts 0..i_max-1 from one landmark draw.

    Mass spent at hole counts >= i_max is kept apart in overflow_mass, so
    sum(values) + overflow_mass == 1 (within float accumulation error).
    """

    values: np.ndarray
    overflow_mass: float

    def __post_init__(self):
        arr = np.asarray(self.values, dtype=np.float64)
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    @property
    def i_max(self) -> int:
        return int(self.values.size)


@dataclass(frozen=True, eq=False)
class MrltDistribution:
    """Entrywise mean of RLT vectors; interpretable as a distribution over hole counts."""

    values: np.ndarray
    overflow_mass: float
    n_experiments: int

    def __post_init__(self):
        arr = np.asarray(self.values, dtype=np.float64)
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    @property
    def i_max(self) -> int:
        return int(self.values.size)


def betti_count(intervals, alpha: float) -> int:
    """Number of intervals whose closed span contains alpha.

    Deaths may be +inf; for alpha within the sweep this is equivalent to
    clamping deaths at the sweep end.
    """
    return sum(1 for iv in intervals if iv.birth <= alpha <= iv.death)


def rlt_from_barcode(barcode: Barcode, i_max: int) -> RltVector:
    """Living-time fractions of the dim-1 Betti counts, by an event sweep.

    Births and deaths (clamped to alpha_max) are walked in order while
    tracking the current hole count; segment lengths accumulate per count
    and are normalized by alpha_max at the end. Half-open segments are used,
    which is measure-equivalent to the closed-interval counting convention.
    """
    if i_max < 1:
        raise ParameterError(f"i_max must be >= 1, got {i_max}")
    alpha_max = barcode.alpha_max
    if not alpha_max > 0:
        raise ParameterError(f"barcode alpha_max must be positive, got {alpha_max}")

    events = []
    for iv in barcode.intervals:
        if iv.dim != 1:
            continue
        death = min(iv.death, alpha_max)
        if death <= iv.birth:
            continue
        events.append((iv.birth, 1))
        events.append((death, -1))
    events.sort()

    values = np.zeros(i_max)
    overflow = 0.0
    level = 0
    prev = 0.0
    for pos, delta in events:
        seg = pos - prev
        if seg > 0.0:
            if level < i_max:
                values[level] += seg
            else:
                overflow += seg
        level += delta
        prev = pos
    tail = alpha_max - prev
    if tail > 0.0:
        if level < i_max:
            values[level] += tail
        else:
            overflow += tail

    values /= alpha_max
    overflow /= alpha_max
    if overflow > OVERFLOW_WARN_THRESHOLD:
        # whole-percent message so repeated warnings deduplicate
        warnings.warn(
            f"hole counts >= i_max={i_max} held {overflow:.0%} of the sweep; "
            "consider a larger i_max",
            stacklevel=2,
        )
    return RltVector(values, float(overflow))


def mean_rlt(rlts) -> MrltDistribution:
    """Entrywise arithmetic mean of RLT vectors sharing one i_max."""
    if not rlts:
        raise ParameterError("mean_rlt needs at least one RLT vector")
    i_max = rlts[0].i_max
    if any(r.i_max != i_max for r in rlts):
        raise ParameterError("RLT vectors have mismatched lengths")
    stacked = np.stack([r.values for r in rlts])
    overflow = float(np.mean([r.overflow_mass for r in rlts]))
    return MrltDistribution(np.mean(stacked, axis=0), overflow, len(rlts))


def geometry_score(a: MrltDistribution, b: MrltDistribution) -> float:
    """Squared L2 distance between two mean distributions over hole counts."""
    if a.i_max != b.i_max:
        raise ParameterError(f"i_max mismatch: {a.i_max} vs {b.i_max}")
    diff = a.values - b.values
    return float(np.dot(diff, diff))


def map_betti(m: MrltDistribution) -> int:
    """Most probable hole count; ties resolve to the smallest index."""
    if m.i_max < 1:
        raise ParameterError("empty distribution")
    return int(np.argmax(m.values))
