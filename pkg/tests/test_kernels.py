"""Both kernel backends must produce bitwise-identical results."""

import numpy as np
import pytest

from topoctl import kernels as K

pytestmark = pytest.mark.skipif(not K.HAVE_NUMBA, reason="numba unavailable")


def rand_case(rng, n=None, d=None):
    n = n or int(rng.integers(2, 35))
    d = d or int(rng.integers(1, 4))
    pts = np.ascontiguousarray(rng.uniform(0, 10, (n, d)))
    radii = np.ascontiguousarray(rng.uniform(0, 5, n))
    return pts, radii


def test_cover_counts_agree():
    rng = np.random.default_rng(0)
    for _ in range(25):
        pts, radii = rand_case(rng)
        q = np.ascontiguousarray(rng.uniform(-2, 12, (31, pts.shape[1])))
        a = K.NUMPY_BACKEND["cover_counts"](pts, radii, q)
        b = K.NUMBA_BACKEND["cover_counts"](pts, radii, q)
        assert np.array_equal(a, b)


def test_prim_mst_agrees():
    rng = np.random.default_rng(1)
    for _ in range(25):
        pts, _ = rand_case(rng)
        a = K.NUMPY_BACKEND["prim_mst"](pts)
        b = K.NUMBA_BACKEND["prim_mst"](pts)
        for x, y in zip(a, b):
            assert np.array_equal(x, y)


def test_prim_mst_agrees_with_ties():
    # integer lattice points force many equal-length candidate edges
    rng = np.random.default_rng(2)
    for _ in range(25):
        n = int(rng.integers(3, 20))
        pts = np.ascontiguousarray(rng.integers(0, 4, (n, 2)).astype(np.float64))
        a = K.NUMPY_BACKEND["prim_mst"](pts)
        b = K.NUMBA_BACKEND["prim_mst"](pts)
        for x, y in zip(a, b):
            assert np.array_equal(x, y)


def test_nn_indices_agree():
    rng = np.random.default_rng(3)
    for _ in range(25):
        pts, _ = rand_case(rng)
        m = int(rng.integers(2, pts.shape[0] + 1))
        act = np.sort(rng.choice(pts.shape[0], size=m, replace=False)).astype(np.int64)
        a = K.NUMPY_BACKEND["nn_indices"](pts, act)
        b = K.NUMBA_BACKEND["nn_indices"](pts, act)
        assert np.array_equal(a, b)


def test_components_and_scans_agree():
    rng = np.random.default_rng(4)
    for trial in range(25):
        pts, radii = rand_case(rng, d=(1 if trial % 2 == 0 else 2))
        a = K.NUMPY_BACKEND["components_sym"](pts, radii)
        b = K.NUMBA_BACKEND["components_sym"](pts, radii)
        assert np.array_equal(a, b)
        if pts.shape[1] == 2:
            assert tuple(K.NUMPY_BACKEND["exact2d_scan"](pts, radii)) == \
                tuple(K.NUMBA_BACKEND["exact2d_scan"](pts, radii))
        else:
            assert tuple(K._np_exact1d_scan(pts, radii)) == \
                tuple(K._nb_exact1d_scan(pts, radii))


def test_grid_depth_max_agrees():
    rng = np.random.default_rng(5)
    for _ in range(20):
        pts, radii = rand_case(rng)
        lo = np.ascontiguousarray(pts.min(axis=0) - 1.0)
        shape = np.full(pts.shape[1], int(rng.integers(3, 12)), np.int64)
        a = K.NUMPY_BACKEND["grid_depth_max"](pts, radii, lo, 0.7, shape)
        b = K.NUMBA_BACKEND["grid_depth_max"](pts, radii, lo, 0.7, shape)
        assert tuple(a) == tuple(b)


def test_min_interference_search_agrees():
    rng = np.random.default_rng(6)
    for trial in range(10):
        n = int(rng.integers(2, 6))
        d = 1 if trial % 2 == 0 else 2
        pts = np.ascontiguousarray(rng.uniform(0, 5, (n, d)))
        acc = np.zeros((n, n))
        for k in range(d):
            diff = pts[:, k, None] - pts[None, :, k]
            acc += diff * diff
        pair_d = np.sqrt(acc)
        cand = np.zeros((n, n - 1))
        ncand = np.zeros(n, np.int64)
        for s in range(n):
            ds = np.unique(pair_d[s][np.arange(n) != s])
            cand[s, :len(ds)] = ds
            ncand[s] = len(ds)
        mode = K._MODE_EXACT1D if d == 1 else K._MODE_EXACT2D
        a = K.NUMPY_BACKEND["min_interference_search"](pts, cand, ncand, pair_d, mode)
        b = K.NUMBA_BACKEND["min_interference_search"](pts, cand, ncand, pair_d, mode)
        assert a[0] == b[0]
        assert np.array_equal(a[1], b[1])
