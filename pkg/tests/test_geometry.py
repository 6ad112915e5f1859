import itertools
import math

import numpy as np
import pytest

from topoctl import (Instance, bucket_of, default_grid, distance, emst,
                     is_valid, nearest_neighbor, r_min, sub_bucket_of,
                     uniform_assignment)


def inst(points, dim=None):
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim == 1:
        pts = pts[:, None]
    return Instance(dim=dim or pts.shape[1], points=pts)


def brute_force_mst_weight(points):
    """Minimum total weight over all spanning trees, by enumeration (n <= 7)."""
    n = len(points)
    edges = [(i, j, math.dist(points[i], points[j]))
             for i in range(n) for j in range(i + 1, n)]
    best = math.inf
    for subset in itertools.combinations(range(len(edges)), n - 1):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        merged = 0
        weight = 0.0
        for e in subset:
            u, v, w = edges[e]
            a, b = find(u), find(v)
            if a != b:
                parent[a] = b
                merged += 1
            weight += w
        if merged == n - 1:
            best = min(best, weight)
    return best


def test_distance_345_triangle():
    i = inst([[0, 0], [3, 4]])
    assert distance(i, 0, 1) == 5.0
    assert distance(i, 1, 0) == 5.0


def test_distance_identity_and_1d():
    i = inst([[0, 0], [3, 4]])
    assert distance(i, 0, 0) == 0.0
    assert distance(inst([0.0, 2.5]), 0, 1) == 2.5


def test_distance_index_out_of_range():
    with pytest.raises(ValueError):
        distance(inst([[0, 0]]), 0, 1)


def test_emst_forced_triangle():
    e = emst(inst([[0, 0], [3, 0], [3, 4]]))
    assert [(u, v, l) for u, v, l in e] == [(0, 1, 3.0), (1, 2, 4.0)]


def test_emst_collinear():
    e = emst(inst([0.0, 1.0, 3.0]))
    assert sorted(e.lengths.tolist()) == [1.0, 2.0]


def test_emst_singleton_empty():
    assert len(emst(inst([[1.0, 2.0]]))) == 0


def test_emst_matches_spanning_tree_enumeration():
    rng = np.random.default_rng(42)
    for _ in range(20):
        n = int(rng.integers(3, 8))
        d = int(rng.integers(1, 4))
        pts = rng.uniform(0, 10, (n, d))
        got = float(np.sum(emst(inst(pts)).lengths))
        want = brute_force_mst_weight(pts.tolist())
        assert got == pytest.approx(want, rel=1e-12)


def test_emst_duplicate_points_zero_edges():
    e = emst(inst([[1.0, 1.0], [1.0, 1.0], [2.0, 1.0]]))
    assert sorted(e.lengths.tolist()) == [0.0, 1.0]


def test_r_min_examples():
    assert r_min(inst([[0, 0], [3, 0], [3, 4]])) == 4.0
    assert r_min(inst([0.0, 1.0, 10.0, 11.0])) == 9.0


def test_r_min_singleton_undefined():
    with pytest.raises(ValueError, match="singleton"):
        r_min(inst([[0.0]], dim=1))


def test_r_min_is_connectivity_threshold():
    rng = np.random.default_rng(7)
    for _ in range(50):
        n = int(rng.integers(2, 30))
        d = int(rng.integers(1, 4))
        i = inst(rng.uniform(0, 5, (n, d)))
        rm = r_min(i)
        assert is_valid(i, uniform_assignment(i, rm), "symmetric")
        if rm > 0:
            assert not is_valid(i, uniform_assignment(i, rm * (1 - 1e-9)), "symmetric")


def test_nearest_neighbor_examples():
    i = inst([0.0, 1.0, 3.0])
    assert nearest_neighbor(i, 1, {0, 1, 2}) == 0
    # equidistant tie goes to the smaller index
    j = inst([0.0, -2.0, 2.0, 5.0, 7.0, 2.0])
    assert nearest_neighbor(j, 0, {2, 5}) == 2


def test_nearest_neighbor_empty_candidates():
    with pytest.raises(ValueError, match="empty candidate"):
        nearest_neighbor(inst([0.0, 1.0]), 0, {0})


def test_nearest_neighbor_matches_linear_scan():
    rng = np.random.default_rng(3)
    i = inst(rng.uniform(0, 1, (40, 2)))
    for _ in range(100):
        s = int(rng.integers(0, 40))
        among = set(int(x) for x in rng.choice(40, size=10, replace=False))
        among.add((s + 1) % 40)
        got = nearest_neighbor(i, s, among)
        cand = sorted(among - {s})
        want = min(cand, key=lambda t: (math.dist(i.points[s], i.points[t]), t))
        assert got == want


def test_bucket_of_examples():
    g = default_grid(inst([[0.0, 0.0], [5.0, 5.0]]), 1.0)
    assert bucket_of([0.0, 0.0], g) == (0, 0)
    g1 = default_grid(inst([0.0, 20.0]), 9.0)
    assert bucket_of([9.0], g1) == (1,)
    assert bucket_of([8.999], g1) == (0,)


def test_bucket_of_is_stable_inside_cells():
    rng = np.random.default_rng(11)
    g = default_grid(inst([[0.0, 0.0], [10.0, 10.0]]), 1.0)
    for _ in range(200):
        p = rng.uniform(0, 10, 2)
        b = bucket_of(p, g)
        # margin to the cell boundary
        frac = p - np.floor(p)
        margin = min(min(frac), min(1 - frac))
        if margin <= 1e-9:
            continue
        q = p + rng.uniform(-1, 1, 2) * margin * 0.5
        assert bucket_of(q, g) == b


def test_sub_bucket_of_examples():
    g = default_grid(inst([[0.0, 0.0], [3.0, 3.0]]), 1.0)
    assert sub_bucket_of([0.1, 0.1], g) == ((0, 0), (0, 0))
    assert sub_bucket_of([0.6, 0.6], g) == ((0, 0), (1, 1))
    g1 = default_grid(inst([0.0, 12.0]), 2.0)
    for x in (0.0, 0.5, 1.9999, 7.3):
        assert sub_bucket_of([x], g1)[1] == (0,)


def test_sub_bucket_diameter_bound():
    rng = np.random.default_rng(5)
    for d in (1, 2, 3):
        g = default_grid(inst(np.zeros((1, d)) if d > 1 else [0.0], dim=d), 1.0)
        pts = rng.uniform(0, 4, (300, d))
        groups = {}
        for p in pts:
            groups.setdefault(sub_bucket_of(p, g), []).append(p)
        bound = 1.0 / math.sqrt(d) * (1 + 1e-12)
        for members in groups.values():
            for a, b in itertools.combinations(members, 2):
                assert math.dist(a, b) <= bound
