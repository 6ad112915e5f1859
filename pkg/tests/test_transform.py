import itertools
import math

import numpy as np
import pytest

from topoctl import (Instance, decompose, interference_at, is_valid, leaders,
                     lnn, neighbor_relation, network_interference, r_min,
                     transform, uniform_assignment, witnesses)
from topoctl.geometry import distance


def inst(points, dim=None):
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim == 1:
        pts = pts[:, None]
    return Instance(dim=dim or pts.shape[1], points=pts)


def random_symmetric_valid(rng, i):
    """Valid-by-construction symmetric assignment: uniform r_min, some raised."""
    base = r_min(i)
    return np.full(i.n, base) * rng.uniform(1.0, 2.5, i.n)


def test_decompose_two_buckets():
    i = inst([0.0, 1.0, 10.0, 11.0])
    dec = decompose(i, 9.0)
    got = [(b, c.tolist()) for b, c in zip(dec.cluster_bucket, dec.clusters)]
    assert got == [((0,), [0, 1]), ((1,), [2, 3])]


def test_decompose_same_bucket_two_clusters():
    i = inst([[0.05, 0.05], [0.95, 0.95], [100.0, 0.0]])
    dec = decompose(i, 1.0, origin=[0.0, 0.0])
    # (0.05,0.05) and (0.95,0.95) share a bucket but are ~1.27 apart
    cl = {tuple(c.tolist()) for c in dec.clusters}
    assert (0,) in cl and (1,) in cl


def test_decompose_1d_buckets_are_clusters():
    rng = np.random.default_rng(0)
    for _ in range(20):
        i = inst(rng.uniform(0, 10, (int(rng.integers(2, 40)), 1)))
        dec = decompose(i, r_min(i))
        assert len(dec.clusters) == len(set(dec.cluster_bucket))


def test_decompose_rejects_small_radius():
    i = inst([0.0, 1.0, 10.0, 11.0])
    with pytest.raises(ValueError, match="below connectivity threshold"):
        decompose(i, 0.1)


def test_cluster_count_per_bucket_bounded():
    rng = np.random.default_rng(1)
    for seed in range(500):
        n = int(rng.integers(2, 40))
        i = inst(rng.uniform(0, 4, (n, 2)))
        dec = decompose(i, r_min(i) if r_min(i) > 0 else 1.0)
        per_bucket = {}
        for b in dec.cluster_bucket:
            per_bucket[b] = per_bucket.get(b, 0) + 1
        assert max(per_bucket.values()) <= 4  # d^d for d=2


def test_decomposition_partitions_sensors():
    rng = np.random.default_rng(2)
    for _ in range(30):
        n = int(rng.integers(2, 60))
        d = int(rng.integers(1, 4))
        i = inst(rng.uniform(0, 6, (n, d)))
        dec = decompose(i, r_min(i) * 1.3 + 1e-9)
        all_ids = sorted(int(s) for c in dec.clusters for s in c)
        assert all_ids == list(range(n))
        for ci, c in enumerate(dec.clusters):
            assert all(dec.cluster_of[s] == ci for s in c)


def test_leaders_two_sub_buckets():
    i = inst([[0.1, 0.1], [0.6, 0.6], [30.0, 0.1]])
    dec = decompose(i, 1.0, origin=[0.0, 0.0])
    ci = int(dec.cluster_of[0])
    assert leaders(dec, ci).tolist() == [0, 1]


def test_leaders_single_sub_bucket_cluster():
    pts = [[0.01 + 0.002 * k, 0.01] for k in range(5)] + [[50.0, 0.0]]
    i = inst(pts)
    dec = decompose(i, 1.0, origin=[0.0, 0.0])
    ci = int(dec.cluster_of[0])
    assert leaders(dec, ci).tolist() == [0]


def test_leader_bound_and_reachability_d2():
    rng = np.random.default_rng(3)
    for _ in range(60):
        n = int(rng.integers(2, 70))
        i = inst(rng.uniform(0, 5, (n, 2)))
        R = r_min(i)
        if R == 0:
            continue
        dec = decompose(i, R)
        for ci, c in enumerate(dec.clusters):
            L = leaders(dec, ci)
            assert 1 <= len(L) <= 12
            for s in c:
                assert min(distance(i, int(s), int(l)) for l in L) <= R


def test_witnesses_inclusive_boundary():
    i = inst([0.0, 1.0, 10.0, 11.0])
    dec = decompose(i, 9.0)
    w = witnesses(dec)
    assert [(u, v) for u, v, _, _ in w] == [(1, 2)]
    assert distance(i, 1, 2) == 9.0


def test_witnesses_only_adjacent_buckets():
    rng = np.random.default_rng(4)
    for _ in range(40):
        n = int(rng.integers(2, 50))
        d = int(rng.integers(1, 3))
        i = inst(rng.uniform(0, 6, (n, d)))
        R = r_min(i)
        if R == 0:
            continue
        dec = decompose(i, R)
        for u, v, cu, cv in witnesses(dec):
            bu, bv = dec.cluster_bucket[cu], dec.cluster_bucket[cv]
            assert max(abs(a - b) for a, b in zip(bu, bv)) <= 1
            assert bu != bv
            assert distance(i, u, v) <= R


def test_neighbor_count_bounded_d2():
    rng = np.random.default_rng(5)
    worst = 0
    for _ in range(60):
        n = int(rng.integers(2, 70))
        i = inst(rng.uniform(0, 5, (n, 2)))
        R = r_min(i)
        if R == 0:
            continue
        counts = {}
        for a, b in neighbor_relation(decompose(i, R)):
            counts[a] = counts.get(a, 0) + 1
            counts[b] = counts.get(b, 0) + 1
        if counts:
            worst = max(worst, max(counts.values()))
    assert worst <= 32  # (3^d - 1) * d^d for d = 2


def test_transform_hand_trace():
    i = inst([0.0, 1.0, 10.0, 11.0])
    res = lnn(i)
    out = transform(i, res.radii, 9.0, model="symmetric")
    assert out.tolist() == [9.0, 9.0, 9.0, 1.0]
    assert is_valid(i, out, "symmetric")


def test_transform_uniform_fixed_point():
    i = inst([0.0, 1.0, 10.0, 11.0])
    r = uniform_assignment(i, 9.0)
    assert transform(i, r, 9.0).tolist() == r.tolist()


def test_transform_raises_only_leaders_and_witnesses():
    rng = np.random.default_rng(6)
    for _ in range(30):
        n = int(rng.integers(2, 50))
        d = int(rng.integers(1, 4))
        i = inst(rng.uniform(0, 5, (n, d)))
        if r_min(i) == 0:
            continue
        r_in = random_symmetric_valid(rng, i)
        R = r_min(i) * float(rng.uniform(1.0, 1.5))
        out = transform(i, r_in, R)
        assert float(out.max()) <= R
        dec = decompose(i, R)
        allowed = set()
        for ci in range(len(dec.clusters)):
            allowed.update(int(x) for x in leaders(dec, ci))
        for u, v, _, _ in witnesses(dec):
            allowed.update((u, v))
        raised = np.flatnonzero(out > r_in)
        assert set(raised.tolist()) <= allowed
        capped = np.flatnonzero(out < r_in)
        assert np.all(out[capped] == R)


def test_transform_preserves_symmetric_validity():
    rng = np.random.default_rng(7)
    for _ in range(40):
        n = int(rng.integers(2, 60))
        d = int(rng.integers(1, 4))
        i = inst(rng.uniform(0, 8, (n, d)))
        if r_min(i) == 0:
            continue
        r_in = random_symmetric_valid(rng, i)
        R = r_min(i) * float(rng.uniform(1.0, 2.0))
        out = transform(i, r_in, R, model="symmetric")
        assert is_valid(i, out, "symmetric")


def test_transform_preserves_asymmetric_validity_of_lnn():
    rng = np.random.default_rng(8)
    for _ in range(40):
        n = int(rng.integers(2, 60))
        d = int(rng.integers(1, 4))
        i = inst(rng.uniform(0, 8, (n, d)))
        if r_min(i) == 0:
            continue
        out = transform(i, lnn(i).radii, r_min(i), model="asymmetric")
        assert is_valid(i, out, "asymmetric")
        assert float(out.max()) <= r_min(i)


def test_transform_rejects_invalid_input():
    i = inst([0.0, 1.0, 10.0, 11.0])
    with pytest.raises(ValueError, match="not valid"):
        transform(i, [1.0, 1.0, 1.0, 1.0], 9.0)


def test_transform_rejects_radius_below_r_min():
    i = inst([0.0, 1.0, 10.0, 11.0])
    with pytest.raises(ValueError, match="below connectivity threshold"):
        transform(i, uniform_assignment(i, 9.0), 5.0)


def test_interference_accounting_pointwise():
    rng = np.random.default_rng(9)
    for _ in range(20):
        n = int(rng.integers(3, 40))
        i = inst(rng.uniform(0, 5, (n, 2)))
        if r_min(i) == 0:
            continue
        r_in = random_symmetric_valid(rng, i)
        R = r_min(i)
        out = transform(i, r_in, R)
        raised = np.flatnonzero(out > r_in)
        rep = network_interference(i, out, "exact2d")
        probes = [rep.witness_point] + [rng.uniform(0, 5, 2) for _ in range(10)]
        for p in probes:
            lhs = interference_at(i, out, p)
            within = sum(1 for s in raised
                         if math.dist(i.points[s], p) <= R)
            assert lhs <= interference_at(i, r_in, p) + within


def test_locality_of_output_radii():
    # far insertions (Chebyshev bucket distance >= 2) leave r_out(s) unchanged
    rng = np.random.default_rng(10)
    checked = 0
    for _ in range(15):
        n = int(rng.integers(10, 40))
        i = inst(rng.uniform(0, 8, (n, 2)))
        base_rmin = r_min(i)
        if base_rmin == 0:
            continue
        R = 2.0 * base_rmin
        origin = i.points.min(axis=0)
        out = transform(i, uniform_assignment(i, R), R, origin=origin)
        cell = np.floor((i.points - origin) / R).astype(int)
        for _ in range(8):
            s = int(rng.integers(0, n))
            t = int(rng.integers(0, n))
            if np.abs(cell[t] - cell[s]).max() < 3:
                continue
            new_pt = i.points[t] + rng.uniform(-0.3, 0.3, 2) * base_rmin
            j = Instance(2, np.vstack([i.points, new_pt[None, :]]))
            out2 = transform(j, uniform_assignment(j, R), R, origin=origin)
            assert out2[s] == out[s]
            checked += 1
    assert checked >= 20
