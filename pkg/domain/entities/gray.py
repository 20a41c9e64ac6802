"""
Domain Layer - Gray Matrix Entity

The 2x2 matrix N over F_q defining phi(a) = (a0', a1') N, with
N N^T = eta I.
"""
from dataclasses import dataclass
from typing import Sequence, Tuple

from domain.entities.field import FieldElement, FieldSpec, format_element, parse_element
from domain.errors import InvalidGrayMatrixError

Row = Tuple[FieldElement, FieldElement]


@dataclass(frozen=True)
class GrayMatrix:
    entries: Tuple[Row, Row]
    eta: FieldElement

    def __post_init__(self):
        """N N^T must equal eta * I with eta nonzero"""
        (a, b), (c, d) = self.entries
        diag0 = a * a + b * b
        diag1 = c * c + d * d
        off = a * c + b * d
        if not off.is_zero or diag0 != diag1 or diag0 != self.eta:
            raise InvalidGrayMatrixError(
                f"N N^T != eta I for N = {self.to_text()}"
            )
        if self.eta.is_zero:
            raise InvalidGrayMatrixError("eta = 0; N N^T is singular")
        if (a * d - b * c).is_zero:
            raise InvalidGrayMatrixError("N is not invertible")

    @classmethod
    def from_entries(cls, entries: Sequence[Sequence[FieldElement]]) -> "GrayMatrix":
        (a, b), (c, d) = entries
        return cls(((a, b), (c, d)), a * a + b * b)

    @classmethod
    def parse(cls, rows: Sequence[Sequence[str]], spec: FieldSpec) -> "GrayMatrix":
        parsed = [[parse_element(tok, spec) for tok in row] for row in rows]
        if len(parsed) != 2 or any(len(row) != 2 for row in parsed):
            raise InvalidGrayMatrixError("Gray matrix must be 2x2")
        return cls.from_entries(parsed)

    @property
    def field(self) -> FieldSpec:
        return self.eta.field

    def row(self, index: int) -> Row:
        return self.entries[index]

    def to_text(self) -> list:
        return [[format_element(x) for x in row] for row in self.entries]


def default_n(spec: FieldSpec) -> GrayMatrix:
    """
    [[1, t], [t, 1]] in even characteristic, [[1, 1], [1, -1]] otherwise.

    Raises:
        InvalidGrayMatrixError: GF(2), where the even default has eta = 0
    """
    one = spec.one()
    if spec.p == 2:
        if spec.q == 2:
            raise InvalidGrayMatrixError("GF(2) has no default Gray matrix; supply N explicitly")
        t = spec.t()
        return GrayMatrix.from_entries(((one, t), (t, one)))
    return GrayMatrix.from_entries(((one, one), (one, -one)))
