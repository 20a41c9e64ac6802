"""
Domain Layer - Double Skew Cyclic Code Entities

C = <(g | 0), (l | h)> in R^r x R^s, stored as the six idempotent
components g_v, g_v', l_v, l_v', h_v, h_v' over F_q.
"""
from dataclasses import dataclass, replace
from math import lcm
from typing import Optional, Tuple

from domain.entities.field import FieldSpec
from domain.entities.linear_code import LinearCodeMatrix
from domain.entities.ring import RingElement, format_ring_element
from domain.entities.skew_poly import FIELD_BASE, SkewPoly, compose, decompose, format_poly
from domain.errors import FieldMismatchError

COMPONENTS = ("v", "v'")


@dataclass(frozen=True)
class DoubleCodeSpec:
    """Generator data of a double skew cyclic code of length (r, s)."""
    field: FieldSpec
    i: int
    r: int
    s: int
    g_v: SkewPoly
    g_vp: SkewPoly
    l_v: SkewPoly
    l_vp: SkewPoly
    h_v: SkewPoly
    h_vp: SkewPoly
    label: str = ""

    def __post_init__(self):
        if self.r < 1 or self.s < 1:
            raise ValueError(f"block lengths must be >= 1, got ({self.r}, {self.s})")
        object.__setattr__(self, "i", self.i % self.field.m)
        for name in ("g_v", "g_vp", "l_v", "l_vp", "h_v", "h_vp"):
            poly = getattr(self, name)
            if poly.base != FIELD_BASE:
                raise FieldMismatchError(f"{name} must be a field-base component")
            if poly.field != self.field or poly.i != self.i:
                raise FieldMismatchError(
                    f"{name} is over {poly.field.name}/theta_{poly.i}, "
                    f"code is over {self.field.name}/theta_{self.i}"
                )

    @classmethod
    def from_ring(cls, r: int, s: int, g: SkewPoly, l: SkewPoly, h: SkewPoly,
                  label: str = "") -> "DoubleCodeSpec":
        g_v, g_vp = decompose(g)
        l_v, l_vp = decompose(l)
        h_v, h_vp = decompose(h)
        return cls(g.field, g.i, r, s, g_v, g_vp, l_v, l_vp, h_v, h_vp, label)

    @property
    def n(self) -> int:
        """Length r + s over R"""
        return self.r + self.s

    @property
    def gray_length(self) -> int:
        return 2 * (self.r + self.s)

    @property
    def gamma(self) -> int:
        return lcm(self.r, self.s)

    @property
    def g(self) -> SkewPoly:
        return compose(self.g_v, self.g_vp)

    @property
    def l(self) -> SkewPoly:
        return compose(self.l_v, self.l_vp)

    @property
    def h(self) -> SkewPoly:
        return compose(self.h_v, self.h_vp)

    def component(self, e: str) -> Tuple[SkewPoly, SkewPoly, SkewPoly]:
        """(g_e, l_e, h_e) for e in {"v", "v'"}"""
        if e == "v":
            return self.g_v, self.l_v, self.h_v
        if e == "v'":
            return self.g_vp, self.l_vp, self.h_vp
        raise ValueError(f"unknown component {e!r}")

    def with_l(self, l_v: SkewPoly, l_vp: SkewPoly) -> "DoubleCodeSpec":
        return replace(self, l_v=l_v, l_vp=l_vp)

    @property
    def expected_dimension(self) -> int:
        """Dimension of the Gray image over F_q from degree bookkeeping"""
        return ((self.r - self.g_v.degree) + (self.r - self.g_vp.degree)
                + (self.s - self.h_v.degree) + (self.s - self.h_vp.degree))

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "s": self.s,
            "i": self.i,
            "g_v": format_poly(self.g_v),
            "g_vp": format_poly(self.g_vp),
            "l_v": format_poly(self.l_v),
            "l_vp": format_poly(self.l_vp),
            "h_v": format_poly(self.h_v),
            "h_vp": format_poly(self.h_vp),
        }


@dataclass(frozen=True)
class DoubleWord:
    """(c_0, ..., c_{r-1} | c'_0, ..., c'_{s-1}) over R"""
    left: Tuple[RingElement, ...]
    right: Tuple[RingElement, ...]

    @classmethod
    def zero(cls, spec: FieldSpec, r: int, s: int) -> "DoubleWord":
        z = RingElement.zero(spec)
        return cls((z,) * r, (z,) * s)

    @property
    def coordinates(self) -> Tuple[RingElement, ...]:
        return self.left + self.right

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.coordinates)

    def __add__(self, other: "DoubleWord") -> "DoubleWord":
        return DoubleWord(
            tuple(a + b for a, b in zip(self.left, other.left)),
            tuple(a + b for a, b in zip(self.right, other.right)),
        )

    def scale(self, c: RingElement) -> "DoubleWord":
        return DoubleWord(tuple(c * a for a in self.left), tuple(c * a for a in self.right))

    def __str__(self) -> str:
        left = ", ".join(format_ring_element(c) for c in self.left)
        right = ", ".join(format_ring_element(c) for c in self.right)
        return f"({left} | {right})"


@dataclass(frozen=True)
class RingMatrix:
    """Matrix over R; rows are DoubleWord coordinate vectors."""
    rows: Tuple[Tuple[RingElement, ...], ...]
    ncols: int

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), self.ncols


@dataclass(frozen=True)
class Violation:
    condition: str
    component: str
    remainder: str = ""

    def __str__(self) -> str:
        detail = f" (remainder {self.remainder})" if self.remainder else ""
        return f"{self.condition} fails for component {self.component}{detail}"

    def to_dict(self) -> dict:
        return {"condition": self.condition, "component": self.component, "remainder": self.remainder}


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of validate(); code is the normalized code when valid."""
    violations: Tuple[Violation, ...]
    code: Optional[DoubleCodeSpec] = None

    @property
    def is_valid(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {"valid": self.is_valid, "violations": [v.to_dict() for v in self.violations]}


@dataclass(frozen=True)
class DualData:
    """Generators of the dual code over R and the Gray parity basis"""
    g_bar: SkewPoly
    l_bar: SkewPoly
    h_bar: SkewPoly
    parity: LinearCodeMatrix
    gamma: int
    dual_code: DoubleCodeSpec

    def to_dict(self) -> dict:
        g_v, g_vp = decompose(self.g_bar)
        l_v, l_vp = decompose(self.l_bar)
        h_v, h_vp = decompose(self.h_bar)
        return {
            "g_bar_v": format_poly(g_v),
            "g_bar_vp": format_poly(g_vp),
            "l_bar_v": format_poly(l_v),
            "l_bar_vp": format_poly(l_vp),
            "h_bar_v": format_poly(h_v),
            "h_bar_vp": format_poly(h_vp),
        }


@dataclass(frozen=True)
class Cardinality:
    """Sizes q^exponent of C, its left projection C_r and right projection C_s"""
    q: int
    total_exp: int
    left_exp: int
    right_exp: int

    @property
    def total(self) -> int:
        return self.q ** self.total_exp

    @property
    def left(self) -> int:
        return self.q ** self.left_exp

    @property
    def right(self) -> int:
        return self.q ** self.right_exp

    def as_triple(self) -> Tuple[int, int, int]:
        return self.total, self.left, self.right
