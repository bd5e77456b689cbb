"""Dense linear algebra over one tower level.

Entries are LevelTables labels; the elimination itself runs on galois field arrays.
"""
import itertools
from typing import List, Tuple

import numpy as np

from ..services.gf import LevelTables


def _as_matrix(M) -> np.ndarray:
    A = np.array(M, dtype=np.int64, copy=True)
    if A.ndim == 1:
        A = A.reshape(1, -1)
    return A


def rref(M, tables: LevelTables) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)"""
    A = _as_matrix(M)
    if A.shape[0] == 0:
        return A, []
    R = tables.to_field(A).row_reduce()
    kept = np.flatnonzero(np.any(R != 0, axis=1))
    R = R[kept]
    pivots = [int(c) for c in (R != 0).argmax(axis=1)]
    return tables.from_field(R), pivots


def rank(M, tables: LevelTables) -> int:
    if np.size(M) == 0:
        return 0
    return int(np.linalg.matrix_rank(tables.to_field(_as_matrix(M))))


def nullspace(M, tables: LevelTables) -> np.ndarray:
    """Basis (as rows) of {x : M x = 0}"""
    A = _as_matrix(M)
    cols = A.shape[1]
    if rank(A, tables) == cols:
        return np.zeros((0, cols), dtype=np.int64)
    return tables.from_field(tables.to_field(A).null_space())


def matmul_t(M, N, tables: LevelTables) -> np.ndarray:
    """M @ N^T for label matrices with equal column counts"""
    A = tables.to_field(_as_matrix(M))
    B = tables.to_field(_as_matrix(N))
    return tables.from_field(A @ B.T)


def span_vectors(basis, tables: LevelTables) -> np.ndarray:
    """Every vector of the span of a small basis, first basis row varying slowest"""
    B = tables.to_field(_as_matrix(basis))
    field = tables.field
    coeffs = field(list(itertools.product(field.elements.tolist(), repeat=B.shape[0])))
    return tables.from_field(coeffs @ B)
