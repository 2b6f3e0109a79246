"""Small exact linear algebra: rational ranks and prime-field row reduction.

The rational-rank routine runs on Fractions and is meant for the tiny
integer matrices produced by quiver modules.  The prime-field routines keep
``int64`` entries; a single product of two reduced residues fits comfortably
below 2**63 for any modulus up to 2**31, so row elimination is vectorized,
while matrix products fall back to exact object arithmetic for large moduli.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

__all__ = [
    "rank_exact",
    "rref_modp",
    "rank_modp",
    "nullspace_modp",
    "matmul_modp",
]

_INT64_MATMUL_LIMIT = 1 << 20


def rank_exact(rows: Sequence[Sequence[int | Fraction]]) -> int:
    """Rank over the rationals by Gaussian elimination on Fractions."""
    matrix = [[Fraction(x) for x in row] for row in rows]
    if not matrix or not matrix[0]:
        return 0
    n_rows, n_cols = len(matrix), len(matrix[0])
    rank = 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if matrix[r][col]), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        inv = Fraction(1, 1) / matrix[rank][col]
        matrix[rank] = [x * inv for x in matrix[rank]]
        for r in range(n_rows):
            if r != rank and matrix[r][col]:
                factor = matrix[r][col]
                matrix[r] = [x - factor * y for x, y in zip(matrix[r], matrix[rank])]
        rank += 1
        if rank == n_rows:
            break
    return rank


def _as_modp(A: np.ndarray, p: int) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    if A.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    return A % p


def rref_modp(A: np.ndarray, p: int) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row echelon form mod p together with the pivot columns."""
    A = _as_modp(A, p).copy()
    n_rows, n_cols = A.shape
    pivots = []
    row = 0
    for col in range(n_cols):
        if row == n_rows:
            break
        nonzero = np.nonzero(A[row:, col])[0]
        if nonzero.size == 0:
            continue
        pivot = row + int(nonzero[0])
        if pivot != row:
            A[[row, pivot]] = A[[pivot, row]]
        inv = pow(int(A[row, col]), -1, p)
        A[row] = A[row] * inv % p
        factors = A[:, col].copy()
        factors[row] = 0
        A = (A - np.outer(factors, A[row])) % p
        pivots.append(col)
        row += 1
    return A, tuple(pivots)


def rank_modp(A: np.ndarray, p: int) -> int:
    return len(rref_modp(A, p)[1])


def nullspace_modp(A: np.ndarray, p: int) -> np.ndarray:
    """A basis of the right kernel mod p, one column per free variable."""
    A = _as_modp(A, p)
    n_cols = A.shape[1]
    reduced, pivots = rref_modp(A, p)
    free = [c for c in range(n_cols) if c not in set(pivots)]
    basis = np.zeros((n_cols, len(free)), dtype=np.int64)
    for idx, col in enumerate(free):
        basis[col, idx] = 1
        for row, pivot_col in enumerate(pivots):
            basis[pivot_col, idx] = (-int(reduced[row, col])) % p
    return basis


def matmul_modp(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    """Exact matrix product mod p, robust to large moduli."""
    A = _as_modp(A, p)
    B = _as_modp(B, p)
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"shape mismatch {A.shape} x {B.shape}")
    if A.shape[0] == 0 or B.shape[1] == 0 or A.shape[1] == 0:
        return np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    if p < _INT64_MATMUL_LIMIT and A.shape[1] * (p - 1) ** 2 < 2**62:
        return A @ B % p
    product = np.dot(A.astype(object), B.astype(object)) % p
    return product.astype(np.int64)
