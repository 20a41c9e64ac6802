"""
Domain Service - Linear Algebra over GF(q)

Gaussian elimination on matrices of element codes (0 = zero, e + 1 = t^e)
using the field's dense addition/multiplication tables.
"""
from __future__ import annotations

from typing import TYPE_CHECKING, List, Optional, Sequence, Tuple

import numpy as np

if TYPE_CHECKING:
    from domain.entities.field import FieldSpec


def row_reduce(spec: FieldSpec, matrix: np.ndarray,
               columns: Optional[Sequence[int]] = None) -> Tuple[np.ndarray, List[int]]:
    """
    Reduced row echelon form with pivots chosen in the given column order.

    Args:
        spec: Field of the entries
        matrix: k x n array of codes
        columns: Columns allowed as pivots, in priority order (all by default)

    Returns:
        (reduced matrix, pivot columns); the first len(pivots) rows are the
        pivot rows in pivot order, remaining rows are zero when every column
        was eligible.
    """
    tab = spec.tables
    red = np.array(matrix, dtype=np.int32, copy=True)
    rows = red.shape[0]
    if columns is None:
        columns = range(red.shape[1])
    pivots: List[int] = []
    row = 0
    for col in columns:
        if row == rows:
            break
        nz = np.flatnonzero(red[row:, col])
        if nz.size == 0:
            continue
        piv = row + int(nz[0])
        if piv != row:
            red[[row, piv]] = red[[piv, row]]
        inv = tab.inv[red[row, col]]
        red[row] = tab.mul[inv, red[row]]
        factors = red[:, col].copy()
        factors[row] = 0
        targets = np.flatnonzero(factors)
        if targets.size:
            scaled = tab.mul[factors[targets][:, None], red[row][None, :]]
            red[targets] = tab.sub[red[targets], scaled]
        pivots.append(int(col))
        row += 1
    return red, pivots


def rank(spec: FieldSpec, matrix: np.ndarray) -> int:
    if matrix.size == 0:
        return 0
    return len(row_reduce(spec, matrix)[1])


def row_basis(spec: FieldSpec, matrix: np.ndarray) -> np.ndarray:
    """Nonzero rows of the reduced row echelon form"""
    if matrix.size == 0:
        return np.zeros((0, matrix.shape[1] if matrix.ndim == 2 else 0), dtype=np.int32)
    red, pivots = row_reduce(spec, matrix)
    return red[:len(pivots)]


def nullspace(spec: FieldSpec, matrix: np.ndarray, ncols: Optional[int] = None) -> np.ndarray:
    """
    Basis of {x : M x^T = 0}, one vector per free column.
    """
    n = matrix.shape[1] if matrix.ndim == 2 and matrix.shape[1] else (ncols or 0)
    if matrix.size == 0:
        basis = np.zeros((n, n), dtype=np.int32)
        basis[np.arange(n), np.arange(n)] = 1
        return basis
    tab = spec.tables
    red, pivots = row_reduce(spec, matrix)
    pivot_set = set(pivots)
    free = [c for c in range(n) if c not in pivot_set]
    basis = np.zeros((len(free), n), dtype=np.int32)
    for idx, f in enumerate(free):
        basis[idx, f] = 1
        for prow, pcol in enumerate(pivots):
            basis[idx, pcol] = tab.neg[red[prow, f]]
    return basis


def reduce_vector(spec: FieldSpec, basis: np.ndarray, pivots: Sequence[int], vec: np.ndarray) -> np.ndarray:
    """Subtract pivot-row multiples from vec; basis must be in RREF with these pivots"""
    tab = spec.tables
    out = np.array(vec, dtype=np.int32, copy=True)
    for prow, pcol in enumerate(pivots):
        c = out[pcol]
        if c:
            out = tab.sub[out, tab.mul[c, basis[prow]]]
    return out


def combine(spec: FieldSpec, messages: np.ndarray, matrix: np.ndarray) -> np.ndarray:
    """messages (b x k) times matrix (k x n) over GF(q)"""
    tab = spec.tables
    messages = np.atleast_2d(messages)
    acc = np.zeros((messages.shape[0], matrix.shape[1]), dtype=np.int32)
    for j in range(matrix.shape[0]):
        coef = messages[:, j]
        if np.any(coef):
            acc = tab.add[acc, tab.mul[coef[:, None], matrix[j][None, :]]]
    return acc


def inner_products(spec: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix of standard inner products <a_i, b_j>"""
    tab = spec.tables
    out = np.zeros((a.shape[0], b.shape[0]), dtype=np.int32)
    for col in range(a.shape[1]):
        out = tab.add[out, tab.mul[a[:, col][:, None], b[:, col][None, :]]]
    return out


def weights(matrix: np.ndarray) -> np.ndarray:
    """Hamming weight of every row"""
    return np.count_nonzero(matrix, axis=-1)
