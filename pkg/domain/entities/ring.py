"""
Domain Layer - Ring Entities

R = F_q + vF_q with v^2 = v. An element a + v*b is stored as the pair
(a, b); arithmetic runs on the idempotent (CRT) view
(a0', a1') = (a + b, a), so that a + vb = v*a0' + (1 - v)*a1'.
"""
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from domain.entities.field import FieldElement, FieldSpec, parse_element, format_element
from domain.errors import FieldMismatchError, NonUnitError, ParseError


@dataclass(frozen=True, slots=True)
class RingElement:
    """a + v*b over a common FieldSpec"""
    a: FieldElement
    b: FieldElement

    def __post_init__(self):
        if self.a.field is not self.b.field and self.a.field != self.b.field:
            raise FieldMismatchError("ring element coordinates from different fields")

    @property
    def field(self) -> FieldSpec:
        return self.a.field

    @classmethod
    def zero(cls, spec: FieldSpec) -> "RingElement":
        return cls(spec.zero(), spec.zero())

    @classmethod
    def one(cls, spec: FieldSpec) -> "RingElement":
        return cls(spec.one(), spec.zero())

    @classmethod
    def v(cls, spec: FieldSpec) -> "RingElement":
        return cls(spec.zero(), spec.one())

    @classmethod
    def v_prime(cls, spec: FieldSpec) -> "RingElement":
        """1 - v"""
        return cls(spec.one(), -spec.one())

    @classmethod
    def scalar(cls, c: FieldElement) -> "RingElement":
        return cls(c, c.field.zero())

    @property
    def is_zero(self) -> bool:
        return self.a.is_zero and self.b.is_zero

    def split(self) -> Tuple[FieldElement, FieldElement]:
        return crt_split(self)

    def __add__(self, other: "RingElement") -> "RingElement":
        return RingElement(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "RingElement") -> "RingElement":
        return RingElement(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "RingElement":
        return RingElement(-self.a, -self.b)

    def __mul__(self, other: "RingElement") -> "RingElement":
        return r_mul(self, other)

    def theta(self, i: int) -> "RingElement":
        return r_theta(self, i)

    def is_unit(self) -> bool:
        return r_is_unit(self)

    def inverse(self) -> "RingElement":
        return r_inv(self)

    def __str__(self) -> str:
        return format_ring_element(self)


def crt_split(x: RingElement) -> Tuple[FieldElement, FieldElement]:
    """(a0', a1') = (a + b, a)"""
    return x.a + x.b, x.a


def crt_join(x0: FieldElement, x1: FieldElement) -> RingElement:
    """Inverse of crt_split: a = a1', b = a0' - a1'"""
    return RingElement(x1, x0 - x1)


def r_mul(x: RingElement, y: RingElement) -> RingElement:
    x0, x1 = crt_split(x)
    y0, y1 = crt_split(y)
    return crt_join(x0 * y0, x1 * y1)


def r_theta(x: RingElement, i: int) -> RingElement:
    """Frobenius on both coordinates; fixes v"""
    return RingElement(x.a.frobenius(i), x.b.frobenius(i))


def r_is_unit(x: RingElement) -> bool:
    x0, x1 = crt_split(x)
    return not x0.is_zero and not x1.is_zero


def r_inv(x: RingElement) -> RingElement:
    x0, x1 = crt_split(x)
    if x0.is_zero or x1.is_zero:
        raise NonUnitError(f"{format_ring_element(x)} is a zero divisor")
    return crt_join(x0.inverse(), x1.inverse())


def random_ring_element(spec: FieldSpec, rng: np.random.Generator) -> RingElement:
    return RingElement(spec.random_element(rng), spec.random_element(rng))


def parse_ring_element(text: str, spec: FieldSpec) -> RingElement:
    """
    Parse `a + v*b`, `a`, `v*b` or `v`.

    Raises:
        ParseError: malformed text
    """
    a, b = spec.zero(), spec.zero()
    compact = text.replace(" ", "")
    if not compact:
        raise ParseError("empty ring element")
    for part in compact.split("+"):
        if not part:
            raise ParseError(f"malformed ring element {text!r}")
        if part == "v":
            b = b + spec.one()
        elif part.startswith("v*"):
            b = b + parse_element(part[2:], spec)
        elif part.endswith("*v"):
            b = b + parse_element(part[:-2], spec)
        else:
            a = a + parse_element(part, spec)
    return RingElement(a, b)


def format_ring_element(x: RingElement) -> str:
    if x.b.is_zero:
        return format_element(x.a)
    vb = f"v*{format_element(x.b)}"
    if x.a.is_zero:
        return vb
    return f"{format_element(x.a)} + {vb}"
