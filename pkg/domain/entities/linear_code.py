"""
Domain Layer - Linear Code Entities

A generator matrix over F_q (usually a Gray image) and the result of a
minimum distance computation.
"""
from dataclasses import dataclass, field as dataclass_field
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

import numpy as np

from domain.entities.field import FieldElement, FieldSpec, format_element
from domain.services import linalg


@dataclass(frozen=True)
class StandardForm:
    """[I_k | A] up to the recorded column permutation"""
    matrix: np.ndarray
    permutation: Tuple[int, ...]
    pivots: Tuple[int, ...]


@dataclass(frozen=True, eq=False)
class LinearCodeMatrix:
    """k x n generator matrix stored as element codes (0 = zero, e + 1 = t^e)."""
    field: FieldSpec
    entries: np.ndarray
    label: str = ""

    def __post_init__(self):
        arr = np.array(self.entries, dtype=np.int32, copy=True)
        if arr.ndim != 2:
            raise ValueError(f"generator matrix must be 2-D, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() >= self.field.q):
            raise ValueError(f"entry codes out of range for {self.field.name}")
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @classmethod
    def from_elements(cls, spec: FieldSpec, rows: Sequence[Sequence[FieldElement]],
                      ncols: Optional[int] = None, label: str = "") -> "LinearCodeMatrix":
        if not rows:
            return cls(spec, np.zeros((0, ncols or 0), dtype=np.int32), label)
        return cls(spec, np.array([[x.code for x in row] for row in rows], dtype=np.int32), label)

    @classmethod
    def empty(cls, spec: FieldSpec, ncols: int, label: str = "") -> "LinearCodeMatrix":
        return cls(spec, np.zeros((0, ncols), dtype=np.int32), label)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def n(self) -> int:
        return self.entries.shape[1]

    @cached_property
    def _reduced(self) -> Tuple[np.ndarray, List[int]]:
        if self.rows == 0:
            return self.entries, []
        return linalg.row_reduce(self.field, self.entries)

    @property
    def rank(self) -> int:
        return len(self._reduced[1])

    @property
    def k(self) -> int:
        """Dimension of the row space"""
        return self.rank

    @property
    def is_full_rank(self) -> bool:
        return self.rank == self.rows

    def row_basis(self) -> "LinearCodeMatrix":
        """Same row space, linearly independent rows (RREF)"""
        red, pivots = self._reduced
        return LinearCodeMatrix(self.field, red[:len(pivots)], self.label)

    @cached_property
    def standard_form(self) -> StandardForm:
        red, pivots = self._reduced
        others = [c for c in range(self.n) if c not in set(pivots)]
        perm = tuple(pivots) + tuple(others)
        return StandardForm(red[:len(pivots)][:, list(perm)], perm, tuple(pivots))

    def contains(self, vec: np.ndarray) -> bool:
        red, pivots = self._reduced
        if not pivots:
            return not np.any(vec)
        return not np.any(linalg.reduce_vector(self.field, red, pivots, np.asarray(vec)))

    def nullspace(self, label: str = "") -> "LinearCodeMatrix":
        return LinearCodeMatrix(self.field, linalg.nullspace(self.field, self.entries, self.n), label)

    def columns(self, cols: Sequence[int], label: str = "") -> "LinearCodeMatrix":
        return LinearCodeMatrix(self.field, self.entries[:, list(cols)], label or self.label)

    def element(self, row: int, col: int) -> FieldElement:
        return self.field.from_code(int(self.entries[row, col]))

    def to_tokens(self) -> List[List[str]]:
        return [[format_element(self.field.from_code(int(c))) for c in row] for row in self.entries]

    def __repr__(self) -> str:
        return f"LinearCodeMatrix({self.label or 'unnamed'}, {self.rows}x{self.n} over {self.field.name})"


@dataclass(frozen=True)
class DistanceResult:
    """
    Bounds on the minimum distance. upper is None only for a code without
    nonzero codewords.
    """
    lower: int
    upper: Optional[int]
    witness: Optional[Tuple[int, ...]] = None
    work: int = 0
    method: str = ""
    elapsed_ms: float = 0.0
    notes: Tuple[str, ...] = dataclass_field(default=())

    def __post_init__(self):
        if self.upper is not None and not 1 <= self.lower <= self.upper:
            raise ValueError(f"inconsistent distance bounds {self.lower}..{self.upper}")

    @property
    def exact(self) -> bool:
        return self.upper is not None and self.lower == self.upper

    @property
    def value(self) -> Optional[int]:
        return self.upper if self.exact else None

    def consistent_with(self, d: int) -> bool:
        return self.upper is not None and self.lower <= d <= self.upper

    def describe(self) -> str:
        if self.upper is None:
            return "-"
        if self.exact:
            return str(self.upper)
        return f"{self.lower}..{self.upper}"

    def to_dict(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "work": self.work,
            "method": self.method,
            "elapsed_ms": round(self.elapsed_ms, 3),
            "witness": list(self.witness) if self.witness is not None else None,
            "notes": list(self.notes),
        }
