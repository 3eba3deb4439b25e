"""Filtered relaxed witness complexes (simplices of dimension <= 2).

A simplex over the landmark set enters the complex at the smallest
relaxation value alpha for which some witness w satisfies, for every vertex
l of the simplex,

    d(w, l)^2 <= d(w, m_w)^2 + alpha,

where m_w is the landmark nearest to w. Appearance times therefore live in
squared-distance units; the raw appearance of a simplex is the minimum over
witnesses of (largest squared vertex distance - nearest-landmark squared
distance). Note the sweep cap alpha_max is conventionally derived from
*unsquared* landmark distances (a fixed fraction of the largest pairwise
landmark distance); the mixed units only rescale the sweep, never its
combinatorics.
"""

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import InternalConsistencyError, ParameterError
from .geometry import DistanceMatrix


@dataclass(frozen=True)
class FilteredSimplex:
    """A simplex (1-3 strictly increasing landmark indices) with its appearance time."""

    vertices: tuple
    appearance: float

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1


@dataclass(frozen=True, eq=False)
class WitnessFiltration:
    """Face-closed, monotone family of simplices with appearances in [0, alpha_max]."""

    simplices: tuple
    alpha_max: float
    n_landmarks: int

    def validate(self):
        """Check face closure, monotonicity and bounds; raise on violation."""
        seen: dict[tuple, float] = {}
        for s in self.simplices:
            k = len(s.vertices)
            if k < 1 or k > 3:
                raise InternalConsistencyError(f"simplex of unsupported size {k}: {s.vertices}")
            if any(b <= a for a, b in zip(s.vertices, s.vertices[1:])):
                raise InternalConsistencyError(f"vertices not strictly increasing: {s.vertices}")
            if s.vertices in seen:
                raise InternalConsistencyError(f"duplicate simplex {s.vertices}")
            if not 0.0 <= s.appearance <= self.alpha_max:
                raise InternalConsistencyError(
                    f"appearance {s.appearance} outside [0, {self.alpha_max}] for {s.vertices}"
                )
            seen[s.vertices] = s.appearance
        for verts, appearance in seen.items():
            if len(verts) == 1:
                continue
            for facet in combinations(verts, len(verts) - 1):
                if facet not in seen:
                    raise InternalConsistencyError(f"missing face {facet} of {verts}")
                if seen[facet] > appearance:
                    raise InternalConsistencyError(
                        f"face {facet} appears after coface {verts}"
                    )


def build_witness_filtration(
    d: DistanceMatrix, alpha_max: float, max_dim: int = 2
) -> WitnessFiltration:
    """Construct the witness filtration capped at alpha_max from a distance matrix.

    Appearance times are lifted to be monotone over faces (a no-op for this
    relaxation, where the raw appearance of a face never exceeds the
    coface's, but enforced explicitly all the same) and only simplices with
    lifted appearance <= alpha_max are returned.

    A witness can only bring a simplex in within the cap if every vertex
    sits within alpha_max (in squared units) of the witness's nearest
    landmark, so the enumeration walks candidate simplices against exactly
    those witnesses; the results equal evaluating the definition over every
    candidate simplex and every witness with no pruning.
    """
    if max_dim != 2:
        raise ParameterError(f"only max_dim=2 is supported, got {max_dim}")
    if not alpha_max > 0:
        raise ParameterError(f"alpha_max must be positive, got {alpha_max}")
    n_landmarks = d.n_landmarks
    if n_landmarks < 1:
        raise ParameterError("empty landmark set")

    s = np.square(d.values)
    # squared distances relative to each witness's nearest landmark
    rel = s - s.min(axis=0)
    f_vert = rel.min(axis=1)

    active = rel <= alpha_max
    f_edge = _edge_appearances(rel, active)
    np.maximum(f_edge, np.maximum(f_vert[:, None], f_vert[None, :]), out=f_edge)

    simplices = []
    for v in np.nonzero(f_vert <= alpha_max)[0]:
        simplices.append(FilteredSimplex((int(v),), float(f_vert[v])))

    adjacency = f_edge <= alpha_max
    ii, jj = np.nonzero(np.triu(adjacency, k=1))
    for i, j in zip(ii.tolist(), jj.tolist()):
        simplices.append(FilteredSimplex((i, j), float(f_edge[i, j])))

    triangles = _candidate_triangles(adjacency, ii, jj)
    if triangles.size:
        a_tri = _triangle_appearances(rel, active, triangles)
        lift = np.maximum(
            f_edge[triangles[:, 0], triangles[:, 1]],
            np.maximum(
                f_edge[triangles[:, 0], triangles[:, 2]],
                f_edge[triangles[:, 1], triangles[:, 2]],
            ),
        )
        f_tri = np.maximum(a_tri, lift)
        for t in np.nonzero(f_tri <= alpha_max)[0]:
            i, j, k = triangles[t]
            simplices.append(FilteredSimplex((int(i), int(j), int(k)), float(f_tri[t])))

    simplices.sort(key=lambda fs: (fs.appearance, len(fs.vertices), fs.vertices))
    return WitnessFiltration(tuple(simplices), float(alpha_max), n_landmarks)


def _edge_appearances(rel: np.ndarray, active: np.ndarray) -> np.ndarray:
    """Raw appearance of every landmark pair: min over witnesses of the larger
    relative squared distance. Exact wherever the result is <= alpha_max; a
    pair only reachable beyond the cap reports +inf, which excludes it just
    as its true value would."""
    n_landmarks, n_witnesses = rel.shape
    best = np.full((n_landmarks, n_landmarks), np.inf)
    if n_landmarks < 2:
        return best
    pairs = np.array(list(combinations(range(n_landmarks), 2)), dtype=np.int64)
    block = max(1, 24_000_000 // n_witnesses)
    for lo in range(0, pairs.shape[0], block):
        pb = pairs[lo : lo + block]
        eligible = active[pb[:, 0]] & active[pb[:, 1]]
        p_idx, w_idx = np.nonzero(eligible)
        if p_idx.size == 0:
            continue
        a = np.maximum(rel[pb[p_idx, 0], w_idx], rel[pb[p_idx, 1], w_idx])
        firsts = np.nonzero(np.diff(p_idx, prepend=-1))[0]
        mins = np.minimum.reduceat(a, firsts)
        bi, bj = pb[p_idx[firsts], 0], pb[p_idx[firsts], 1]
        best[bi, bj] = mins
        best[bj, bi] = mins
    return best


def _candidate_triangles(adjacency: np.ndarray, ii: np.ndarray, jj: np.ndarray) -> np.ndarray:
    """Triangles of the surviving edge graph (every face must be alive first)."""
    triangles = []
    for i, j in zip(ii.tolist(), jj.tolist()):
        ks = np.nonzero(adjacency[i] & adjacency[j])[0]
        for k in ks[ks > j].tolist():
            triangles.append((i, j, k))
    return np.asarray(triangles, dtype=np.int64).reshape(-1, 3)


def _triangle_appearances(rel: np.ndarray, active: np.ndarray, triangles: np.ndarray) -> np.ndarray:
    n_tri = triangles.shape[0]
    best = np.full(n_tri, np.inf)
    block = max(1, 24_000_000 // rel.shape[1])
    for lo in range(0, n_tri, block):
        tri = triangles[lo : lo + block]
        eligible = active[tri[:, 0]] & active[tri[:, 1]] & active[tri[:, 2]]
        t_idx, w_idx = np.nonzero(eligible)
        if t_idx.size == 0:
            continue
        a = np.maximum(
            rel[tri[t_idx, 0], w_idx],
            np.maximum(rel[tri[t_idx, 1], w_idx], rel[tri[t_idx, 2], w_idx]),
        )
        firsts = np.nonzero(np.diff(t_idx, prepend=-1))[0]
        best[lo + t_idx[firsts]] = np.minimum.reduceat(a, firsts)
    return best
