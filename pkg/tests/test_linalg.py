from fractions import Fraction

import numpy as np

from mvlab.linalg import (
    matmul_modp,
    nullspace_modp,
    rank_exact,
    rank_modp,
    rref_modp,
)

P_SMALL = 65521
P_BIG = 2147483647


def test_rank_exact():
    assert rank_exact([[1, 2], [2, 4]]) == 1
    assert rank_exact([[1, 0], [0, 1]]) == 2
    assert rank_exact([]) == 0
    assert rank_exact([[0, 0, 0]]) == 0
    assert rank_exact([[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), Fraction(1, 1)]]) == 1
    assert rank_exact([[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 4), Fraction(1, 5)]]) == 2


def test_rank_modp_agrees_with_exact_on_small_entries():
    rng = np.random.default_rng(7)
    for _ in range(20):
        A = rng.integers(-4, 5, size=(5, 7))
        assert rank_modp(A, P_SMALL) == rank_exact(A.tolist())
        assert rank_modp(A, P_BIG) == rank_exact(A.tolist())


def test_rref_pivots():
    reduced, pivots = rref_modp(np.array([[2, 4], [1, 2]]), P_SMALL)
    assert pivots == (0,)
    assert reduced[0][0] == 1


def test_nullspace_is_a_kernel_basis():
    A = np.array([[1, 2, 3], [2, 4, 6]])
    for p in (P_SMALL, P_BIG):
        basis = nullspace_modp(A, p)
        assert basis.shape == (3, 2)
        prod = matmul_modp(A % p, basis, p)
        assert not prod.any()
        assert rank_modp(basis, p) == 2


def test_matmul_paths_agree():
    rng = np.random.default_rng(11)
    A = rng.integers(0, P_SMALL, size=(4, 6))
    B = rng.integers(0, P_SMALL, size=(6, 3))
    small = matmul_modp(A % P_SMALL, B % P_SMALL, P_SMALL)
    exact = (A.astype(object) @ B.astype(object)) % P_SMALL
    assert (small == exact.astype(np.int64)).all()
    # the big prime forces the object-dtype path
    Ab, Bb = A % P_BIG, B % P_BIG
    big = matmul_modp(Ab, Bb, P_BIG)
    exact_big = (A.astype(object) @ B.astype(object)) % P_BIG
    assert (np.asarray(big, dtype=object) == exact_big).all()


def test_matmul_zero_sized():
    A = np.zeros((0, 3), dtype=np.int64)
    B = np.zeros((3, 2), dtype=np.int64)
    out = matmul_modp(A, B, P_SMALL)
    assert out.shape == (0, 2)
