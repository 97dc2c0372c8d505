import numpy as np
import pytest

from gorlab import linalg as la

SMALL_FIELDS = [la.PrimeField(2), la.PrimeField(3), la.PrimeField(5), la.GF4()]


def _elements(f):
    return range(f.order)


@pytest.mark.parametrize("f", SMALL_FIELDS, ids=lambda f: "order%d" % f.order)
def test_field_axioms_exhaustive(f):
    els = list(_elements(f))
    for a in els:
        assert f.add(a, 0) == a
        assert f.mul(a, 1) == a
        assert f.add(a, f.neg(a)) == 0
        if a != 0:
            assert f.mul(a, f.inv(a)) == 1
        for b in els:
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)
            for c in els:
                assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
                assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
                assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b),
                                                      f.mul(a, c))


def test_large_prime_field_sample():
    f = la.PrimeField(101)
    rng = np.random.default_rng(0)
    for a, b, c in rng.integers(0, 101, size=(50, 3)):
        a, b, c = int(a), int(b), int(c)
        assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
        if a:
            assert f.mul(a, f.inv(a)) == 1


def test_nonprime_order_rejected():
    with pytest.raises(la.FieldError):
        la.PrimeField(9)
    with pytest.raises(la.FieldError):
        la.PrimeField(1)


def _naive_matmul(f, a, b):
    m, k = a.shape
    k2, n = b.shape
    out = np.zeros((m, n), dtype=np.int64)
    for i in range(m):
        for j in range(n):
            acc = 0
            for t in range(k):
                acc = f.add(acc, f.mul(int(a[i, t]), int(b[t, j])))
            out[i, j] = acc
    return out


@pytest.mark.parametrize("f", SMALL_FIELDS, ids=lambda f: "order%d" % f.order)
def test_matmul_matches_naive(f):
    rng = np.random.default_rng(1)
    for _ in range(5):
        a = rng.integers(0, f.order, size=(4, 3))
        b = rng.integers(0, f.order, size=(3, 5))
        assert np.array_equal(f.matmul(a, b), _naive_matmul(f, a, b))


def test_matmul_empty_inner_dimension():
    f = la.GF4()
    a = np.zeros((3, 0), dtype=np.int64)
    b = np.zeros((0, 2), dtype=np.int64)
    assert np.array_equal(f.matmul(a, b), np.zeros((3, 2), dtype=np.int64))


@pytest.mark.parametrize("f", SMALL_FIELDS, ids=lambda f: "order%d" % f.order)
def test_kernel_rank_and_solve(f):
    rng = np.random.default_rng(2)
    for _ in range(10):
        arr = rng.integers(0, f.order, size=(5, 7))
        m = la.Matrix.make(f, arr)
        ker = la.kernel_basis(m)
        assert la.rank(m) + len(ker) == 7
        for v in ker:
            prod = f.matmul(arr, np.asarray(v).reshape(-1, 1))
            assert not prod.any()
        # a solvable system: rhs in the column space by construction
        x = rng.integers(0, f.order, size=(7, 1))
        rhs = f.matmul(arr, x).ravel()
        sol = la.solve(m, rhs)
        assert not isinstance(sol, la.NoSolution)
        assert np.array_equal(f.matmul(arr, np.asarray(sol).reshape(-1, 1)
                                       ).ravel(), rhs)


def test_solve_reports_inconsistent_system():
    f = la.PrimeField(2)
    m = la.Matrix.make(f, np.zeros((2, 2), dtype=np.int64))
    assert isinstance(la.solve(m, np.array([1, 0], dtype=np.int64)),
                      la.NoSolution)


def test_gf4_is_characteristic_two_not_z4():
    f = la.GF4()
    assert f.order == 4
    for a in range(4):
        assert f.add(a, a) == 0          # characteristic 2
    # the three nonzero elements form a cyclic group of order 3
    nonzero = {1, 2, 3}
    for a in nonzero:
        assert {f.mul(a, b) for b in nonzero} == nonzero
