"""Independent reference implementations the tests check against.

Everything here is written for obviousness, not speed: plain loops, literal
definitions, dense matrices. None of it shares code with the package.
"""

import math
from itertools import combinations

import numpy as np


def naive_distance_matrix(rows, cloud):
    """Scalar double-loop Euclidean distances."""
    out = [[0.0] * len(cloud) for _ in range(len(rows))]
    for i, a in enumerate(rows):
        for j, b in enumerate(cloud):
            acc = 0.0
            for x, y in zip(a, b):
                acc += (float(x) - float(y)) ** 2
            out[i][j] = math.sqrt(acc)
    return out


def exhaustive_witness_filtration(dist_values, alpha_max):
    """Literal evaluation of the witness predicate for every candidate simplex.

    A witness w admits simplex sigma at relaxation alpha when every vertex
    satisfies d(w, l)^2 <= d(w, nearest landmark of w)^2 + alpha. Returns
    {vertex tuple: appearance} for all simplices of dimension <= 2 whose
    monotone-lifted appearance is within alpha_max. No pruning at all.
    """
    n_landmarks, n_witnesses = dist_values.shape
    s = [[float(dist_values[l, w]) ** 2 for w in range(n_witnesses)] for l in range(n_landmarks)]
    nearest = [min(s[l][w] for l in range(n_landmarks)) for w in range(n_witnesses)]
    raw = {}
    for size in (1, 2, 3):
        for sigma in combinations(range(n_landmarks), size):
            best = math.inf
            for w in range(n_witnesses):
                alpha = max(s[l][w] for l in sigma) - nearest[w]
                if alpha < 0.0:
                    alpha = 0.0
                if alpha < best:
                    best = alpha
            raw[sigma] = best
    lifted = {}
    for sigma in sorted(raw, key=len):
        value = raw[sigma]
        if len(sigma) > 1:
            for facet in combinations(sigma, len(sigma) - 1):
                if lifted[facet] > value:
                    value = lifted[facet]
        lifted[sigma] = value
    return {sigma: v for sigma, v in lifted.items() if v <= alpha_max}


def gf2_rank(matrix) -> int:
    """Rank over the two-element field by Gaussian elimination."""
    m = (np.asarray(matrix, dtype=np.uint8) % 2).copy()
    rank = 0
    row = 0
    n_rows, n_cols = m.shape
    for col in range(n_cols):
        piv = None
        for i in range(row, n_rows):
            if m[i, col]:
                piv = i
                break
        if piv is None:
            continue
        m[[row, piv]] = m[[piv, row]]
        for i in range(n_rows):
            if i != row and m[i, col]:
                m[i] ^= m[row]
        rank += 1
        row += 1
        if row == n_rows:
            break
    return rank


def betti_numbers_by_rank(simplices, alpha):
    """(beta0, beta1) of the subcomplex at threshold alpha, from boundary ranks.

    simplices is an iterable of objects with .vertices and .appearance.
    """
    alive = [s for s in simplices if s.appearance <= alpha]
    verts = sorted(s.vertices for s in alive if len(s.vertices) == 1)
    edges = sorted(s.vertices for s in alive if len(s.vertices) == 2)
    tris = sorted(s.vertices for s in alive if len(s.vertices) == 3)
    v_index = {v: i for i, v in enumerate(verts)}
    e_index = {e: i for i, e in enumerate(edges)}
    d1 = np.zeros((len(verts), len(edges)), dtype=np.uint8)
    for e in edges:
        d1[v_index[(e[0],)], e_index[e]] = 1
        d1[v_index[(e[1],)], e_index[e]] = 1
    d2 = np.zeros((len(edges), len(tris)), dtype=np.uint8)
    for t_i, t in enumerate(tris):
        for facet in ((t[0], t[1]), (t[0], t[2]), (t[1], t[2])):
            d2[e_index[facet], t_i] = 1
    r1 = gf2_rank(d1) if d1.size else 0
    r2 = gf2_rank(d2) if d2.size else 0
    return len(verts) - r1, len(edges) - r1 - r2


def rank_of_2_cycles(simplices, alpha) -> int:
    """Dimension of the kernel of the triangle boundary map at threshold alpha."""
    alive = [s for s in simplices if s.appearance <= alpha]
    edges = sorted(s.vertices for s in alive if len(s.vertices) == 2)
    tris = sorted(s.vertices for s in alive if len(s.vertices) == 3)
    e_index = {e: i for i, e in enumerate(edges)}
    d2 = np.zeros((len(edges), len(tris)), dtype=np.uint8)
    for t_i, t in enumerate(tris):
        for facet in ((t[0], t[1]), (t[0], t[2]), (t[1], t[2])):
            d2[e_index[facet], t_i] = 1
    return len(tris) - (gf2_rank(d2) if d2.size else 0)


def interval_count_alive(intervals, dim, alpha) -> int:
    """Half-open indicator sum: intervals [b, d) of one dimension alive at alpha."""
    return sum(1 for iv in intervals if iv.dim == dim and iv.birth <= alpha < iv.death)


def random_witness_instances(n_instances, seed, max_landmarks=8, max_witnesses=32):
    """Small random (cloud, landmark index, gamma) triples covering awkward cases:
    ties, duplicated points, tiny landmark counts, several sweep widths."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < n_instances:
        trial = len(out)
        n_landmarks = int(rng.integers(1, max_landmarks + 1))
        n_points = int(rng.integers(max(n_landmarks, 2), max_witnesses + 1))
        dim = int(rng.integers(1, 4))
        kind = trial % 4
        if kind == 0:
            cloud = rng.normal(size=(n_points, dim))
        elif kind == 1:
            theta = rng.uniform(0, 2 * np.pi, n_points)
            cloud = np.column_stack([np.cos(theta), np.sin(theta)])
            cloud += rng.normal(0, 0.05, cloud.shape)
        elif kind == 2:
            cloud = rng.integers(0, 3, size=(n_points, dim)).astype(float)
        else:
            base = rng.normal(size=(max(1, n_points // 4), dim))
            cloud = np.repeat(base, 4, axis=0)
        if cloud.shape[0] < n_landmarks:
            continue
        indices = np.sort(rng.choice(cloud.shape[0], size=n_landmarks, replace=False))
        gamma = (0.125, 0.5, 2.0)[trial % 3]
        out.append((cloud, indices, gamma))
    return out
