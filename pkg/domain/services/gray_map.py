"""
Domain Service - Gray Map

phi : R -> F_q^2, a -> (a0', a1') N, extended coordinatewise to words and
row-wise to matrices.
"""
from typing import Sequence, Tuple

import numpy as np

from domain.entities.field import FieldElement
from domain.entities.gray import GrayMatrix
from domain.entities.linear_code import LinearCodeMatrix
from domain.entities.ring import RingElement, crt_split


def phi(x: RingElement, n: GrayMatrix) -> Tuple[FieldElement, FieldElement]:
    a0, a1 = crt_split(x)
    (n00, n01), (n10, n11) = n.entries
    return a0 * n00 + a1 * n10, a0 * n01 + a1 * n11


def phi_word(word: Sequence[RingElement], n: GrayMatrix) -> Tuple[FieldElement, ...]:
    out = []
    for x in word:
        out.extend(phi(x, n))
    return tuple(out)


def phi_codes(word: Sequence[RingElement], n: GrayMatrix) -> np.ndarray:
    return np.array([y.code for y in phi_word(word, n)], dtype=np.int32)


def gray_weight(word: Sequence[RingElement], n: GrayMatrix) -> int:
    """Hamming weight of phi(word)"""
    return sum(1 for y in phi_word(word, n) if not y.is_zero)


def phi_matrix(rows: Sequence[Sequence[RingElement]], n: GrayMatrix, ncols: int,
               label: str = "") -> LinearCodeMatrix:
    """k x w matrix over R -> k x 2w matrix over F_q"""
    spec = n.field
    if not rows:
        return LinearCodeMatrix.empty(spec, 2 * ncols, label)
    return LinearCodeMatrix(spec, np.array([phi_codes(row, n) for row in rows], dtype=np.int32), label)


def phi_component_rows(rows: Sequence[Tuple[int, np.ndarray]], n: GrayMatrix, width: int,
                       label: str = "") -> LinearCodeMatrix:
    """
    Gray image of pure-idempotent rows.

    Each row is (component index, field codes) where index 0 means the
    word is c*v and index 1 means c*v'. A v-coordinate c maps to c * row 0
    of N, a v'-coordinate to c * row 1.
    """
    spec = n.field
    if not rows:
        return LinearCodeMatrix.empty(spec, 2 * width, label)
    mul = spec.tables.mul
    out = np.zeros((len(rows), 2 * width), dtype=np.int32)
    for idx, (e, codes) in enumerate(rows):
        first, second = n.row(e)
        out[idx, 0::2] = mul[codes[:width], first.code]
        out[idx, 1::2] = mul[codes[:width], second.code]
    return LinearCodeMatrix(spec, out, label)
