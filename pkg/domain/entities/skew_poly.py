"""
Domain Layer - Skew Polynomial Entity

Polynomials over F_q or R under the twist x*r = theta_i(r)*x, so that
(a x^m)(b x^n) = a theta_i^m(b) x^(m+n). Only right division, right gcd
and right lcm are provided.
"""
import re
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from domain.entities.field import FieldElement, FieldSpec, format_element, parse_element
from domain.entities.ring import (
    RingElement,
    crt_join,
    crt_split,
    format_ring_element,
    r_inv,
    r_theta,
)
from domain.errors import FieldMismatchError, NonUnitError, ParseError

FIELD_BASE = "F"
RING_BASE = "R"

# Degree of the zero polynomial; stands in for minus infinity.
ZERO_DEGREE = -1

Coefficient = Union[FieldElement, RingElement]


def _zero(spec: FieldSpec, base: str) -> Coefficient:
    return spec.zero() if base == FIELD_BASE else RingElement.zero(spec)


def _one(spec: FieldSpec, base: str) -> Coefficient:
    return spec.one() if base == FIELD_BASE else RingElement.one(spec)


def _twist(c: Coefficient, power: int) -> Coefficient:
    """theta^power on a coefficient, power already multiplied by i"""
    if isinstance(c, RingElement):
        return r_theta(c, power)
    return c.frobenius(power)


def _inverse(c: Coefficient) -> Coefficient:
    if isinstance(c, RingElement):
        return r_inv(c)
    return c.inverse()


@dataclass(frozen=True)
class SkewPoly:
    """
    Element of F_q[x; theta_i] or R[x; theta_i].

    coeffs are ascending in degree with no trailing zeros; the zero
    polynomial has an empty coefficient tuple.
    """
    field: FieldSpec
    i: int
    coeffs: Tuple[Coefficient, ...]
    base: str = FIELD_BASE

    def __post_init__(self):
        if self.base not in (FIELD_BASE, RING_BASE):
            raise ValueError(f"unknown polynomial base {self.base!r}")
        coeffs = list(self.coeffs)
        while coeffs and coeffs[-1].is_zero:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "i", self.i % self.field.m)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, spec: FieldSpec, i: int, base: str = FIELD_BASE) -> "SkewPoly":
        return cls(spec, i, (), base)

    @classmethod
    def one(cls, spec: FieldSpec, i: int, base: str = FIELD_BASE) -> "SkewPoly":
        return cls(spec, i, (_one(spec, base),), base)

    @classmethod
    def monomial(cls, spec: FieldSpec, i: int, n: int, coeff: Optional[Coefficient] = None,
                 base: str = FIELD_BASE) -> "SkewPoly":
        """coeff * x^n"""
        c = coeff if coeff is not None else _one(spec, base)
        return cls(spec, i, (_zero(spec, base),) * n + (c,), base)

    @classmethod
    def x_n_minus_one(cls, spec: FieldSpec, i: int, n: int, base: str = FIELD_BASE) -> "SkewPoly":
        one = _one(spec, base)
        if n == 0:
            return cls.zero(spec, i, base)
        return cls(spec, i, (-one,) + (_zero(spec, base),) * (n - 1) + (one,), base)

    # -- basic facts -------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Coefficient:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, k: int) -> Coefficient:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return _zero(self.field, self.base)

    def padded(self, length: int) -> List[Coefficient]:
        """Coefficient list of exactly `length` entries (deg < length required)"""
        if len(self.coeffs) > length:
            raise ValueError(f"degree {self.degree} does not fit in length {length}")
        return list(self.coeffs) + [_zero(self.field, self.base)] * (length - len(self.coeffs))

    def is_monic(self) -> bool:
        if self.is_zero:
            return False
        lead = self.leading
        if isinstance(lead, RingElement):
            return lead.a.is_one and lead.b.is_zero
        return lead.is_one

    def _compatible(self, other: "SkewPoly"):
        if self.base != other.base or self.i != other.i:
            raise FieldMismatchError(
                f"polynomials over different bases/automorphisms: "
                f"({self.base}, theta_{self.i}) vs ({other.base}, theta_{other.i})"
            )
        if self.field is not other.field and self.field != other.field:
            raise FieldMismatchError(f"{self.field.name} vs {other.field.name}")

    def _with(self, coeffs: Sequence[Coefficient]) -> "SkewPoly":
        return SkewPoly(self.field, self.i, tuple(coeffs), self.base)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "SkewPoly") -> "SkewPoly":
        self._compatible(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return self._with([self.coefficient(k) + other.coefficient(k) for k in range(n)])

    def __sub__(self, other: "SkewPoly") -> "SkewPoly":
        self._compatible(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return self._with([self.coefficient(k) - other.coefficient(k) for k in range(n)])

    def __neg__(self) -> "SkewPoly":
        return self._with([-c for c in self.coeffs])

    def __mul__(self, other: "SkewPoly") -> "SkewPoly":
        return s_mul(self, other)

    def scale_left(self, c: Coefficient) -> "SkewPoly":
        """c * f (coefficientwise on the left, no twist)"""
        return self._with([c * a for a in self.coeffs])

    def monic(self) -> "SkewPoly":
        """Left-multiply by the inverse of the leading coefficient"""
        if self.is_zero:
            return self
        return self.scale_left(_inverse(self.leading))

    def theta(self, k: int = 1) -> "SkewPoly":
        return theta_map(self, k)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"SkewPoly({format_poly(self)}; {self.field.name}, theta_{self.i}, {self.base})"


# -- operations ---------------------------------------------------------------

def s_mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """Noncommutative product: (a x^m)(b x^n) = a theta^m(b) x^(m+n)"""
    f._compatible(g)
    if f.is_zero or g.is_zero:
        return SkewPoly.zero(f.field, f.i, f.base)
    out = [_zero(f.field, f.base)] * (len(f.coeffs) + len(g.coeffs) - 1)
    for m, a in enumerate(f.coeffs):
        if a.is_zero:
            continue
        twist = f.i * m
        for n, b in enumerate(g.coeffs):
            if not b.is_zero:
                out[m + n] = out[m + n] + a * _twist(b, twist)
    return f._with(out)


@dataclass(frozen=True)
class DivisionResult:
    quot: SkewPoly
    rem: SkewPoly

    def __iter__(self):
        return iter((self.quot, self.rem))


def right_divmod(g: SkewPoly, f: SkewPoly) -> DivisionResult:
    """
    Right division g = quot * f + rem with deg rem < deg f.

    Raises:
        NonUnitError: f = 0, or its leading coefficient is a zero divisor
    """
    g._compatible(f)
    if f.is_zero:
        raise NonUnitError("right division by the zero polynomial")
    lead_inv = _inverse(f.leading)
    df = f.degree
    zero = _zero(f.field, f.base)
    rem = list(g.coeffs)
    quot = [zero] * max(g.degree - df + 1, 0)
    for d in range(g.degree - df, -1, -1):
        c = rem[d + df]
        if c.is_zero:
            continue
        twist = f.i * d
        cq = c * _twist(lead_inv, twist)
        quot[d] = cq
        for k, fk in enumerate(f.coeffs):
            if not fk.is_zero:
                rem[d + k] = rem[d + k] - cq * _twist(fk, twist)
    return DivisionResult(g._with(quot), g._with(rem[:df]))


def right_rem(g: SkewPoly, f: SkewPoly) -> SkewPoly:
    return right_divmod(g, f).rem


def is_right_divisor(f: SkewPoly, g: SkewPoly) -> bool:
    """
    True iff f |_r g. Over R the check runs per idempotent component, so f
    may have components of different degrees.
    """
    f._compatible(g)
    if f.base == RING_BASE:
        fv, fvp = decompose(f)
        gv, gvp = decompose(g)
        return is_right_divisor(fv, gv) and is_right_divisor(fvp, gvp)
    if f.is_zero:
        return g.is_zero
    return right_divmod(g, f).rem.is_zero


def right_gcd(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """Monic greatest common right divisor; per component over R."""
    f._compatible(g)
    if f.base == RING_BASE:
        fv, fvp = decompose(f)
        gv, gvp = decompose(g)
        return compose(_component_gcd(fv, gv), _component_gcd(fvp, gvp))
    if f.is_zero and g.is_zero:
        raise ValueError("gcd of two zero polynomials is undefined")
    a, b = f, g
    while not b.is_zero:
        a, b = b, right_divmod(a, b).rem
    return a.monic()


def _component_gcd(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    if f.is_zero and g.is_zero:
        return f
    return right_gcd(f, g)


def right_lcm(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """
    Monic least common left multiple (f |_r lcm and g |_r lcm).

    Runs the extended Euclidean cascade r_k = u_k f + v_k g; at the first
    zero remainder u_k f = -v_k g is the lcm up to a scalar.
    """
    f._compatible(g)
    if f.base == RING_BASE:
        fv, fvp = decompose(f)
        gv, gvp = decompose(g)
        return compose(right_lcm(fv, gv), right_lcm(fvp, gvp))
    if f.is_zero or g.is_zero:
        raise ValueError("lcm with the zero polynomial is undefined")
    r0, r1 = f, g
    u0, u1 = SkewPoly.one(f.field, f.i), SkewPoly.zero(f.field, f.i)
    while not r1.is_zero:
        quot, rem = right_divmod(r0, r1)
        r0, r1 = r1, rem
        u0, u1 = u1, u0 - s_mul(quot, u1)
    return s_mul(u1, f).monic()


def reciprocal_star(f: SkewPoly) -> SkewPoly:
    """f*(x) = sum_j theta^j(a_{s-j}) x^j with s = deg f"""
    if f.is_zero:
        return f
    s = f.degree
    return f._with([_twist(f.coeffs[s - j], f.i * j) for j in range(s + 1)])


def theta_map(f: SkewPoly, k: int) -> SkewPoly:
    """Apply theta_i to every coefficient, k times"""
    return f._with([_twist(c, f.i * k) for c in f.coeffs])


def decompose(f: SkewPoly) -> Tuple[SkewPoly, SkewPoly]:
    """f = f_v v + f_v' v' -> (f_v, f_v') over the field base"""
    if f.base != RING_BASE:
        raise FieldMismatchError("decompose expects a polynomial over R")
    pairs = [crt_split(c) for c in f.coeffs]
    fv = SkewPoly(f.field, f.i, tuple(p[0] for p in pairs), FIELD_BASE)
    fvp = SkewPoly(f.field, f.i, tuple(p[1] for p in pairs), FIELD_BASE)
    return fv, fvp


def compose(fv: SkewPoly, fvp: SkewPoly) -> SkewPoly:
    """Inverse of decompose"""
    fv._compatible(fvp)
    if fv.base != FIELD_BASE:
        raise FieldMismatchError("compose expects field-base components")
    n = max(len(fv.coeffs), len(fvp.coeffs))
    coeffs = [crt_join(fv.coefficient(k), fvp.coefficient(k)) for k in range(n)]
    return SkewPoly(fv.field, fv.i, tuple(coeffs), RING_BASE)


# -- text form ----------------------------------------------------------------

_TERM = re.compile(r"^(?:(?P<coef>\d+|t(?:\^\d+)?)\*?)?(?P<x>x(?:\^(?P<deg>\d+))?)?$")


def parse_poly(text: str, spec: FieldSpec, i: int) -> SkewPoly:
    """
    Parse a field-base polynomial such as `x^3 + t^17*x^2 + t^22*x + t^25`.

    Whitespace and braces are ignored, `-` negates a term and repeated
    degrees are summed.

    Raises:
        ParseError: malformed text
    """
    s = text.replace(" ", "").replace("{", "").replace("}", "")
    if not s:
        raise ParseError("empty polynomial")
    terms = re.findall(r"[+-]?[^+-]+", s)
    if "".join(terms) != s:
        raise ParseError(f"malformed polynomial {text!r}")
    coeffs: dict = {}
    for raw in terms:
        sign = raw[0] if raw[0] in "+-" else "+"
        body = raw.lstrip("+-")
        match = _TERM.match(body)
        if not body or match is None or (match.group("coef") is None and match.group("x") is None):
            raise ParseError(f"malformed polynomial term {raw!r} in {text!r}")
        coef = parse_element(match.group("coef"), spec) if match.group("coef") else spec.one()
        if sign == "-":
            coef = -coef
        if match.group("x") is None:
            deg = 0
        else:
            deg = int(match.group("deg")) if match.group("deg") else 1
        coeffs[deg] = coeffs.get(deg, spec.zero()) + coef
    top = max(coeffs)
    return SkewPoly(spec, i, tuple(coeffs.get(k, spec.zero()) for k in range(top + 1)))


def format_poly(f: SkewPoly) -> str:
    if f.is_zero:
        return "0"
    parts = []
    for k in range(f.degree, -1, -1):
        c = f.coeffs[k]
        if c.is_zero:
            continue
        if isinstance(c, RingElement):
            tok = format_ring_element(c)
            is_one = c.a.is_one and c.b.is_zero
            if " " in tok:
                tok = f"({tok})"
        else:
            tok = format_element(c)
            is_one = c.is_one
        if k == 0:
            parts.append(tok)
            continue
        mono = "x" if k == 1 else f"x^{k}"
        parts.append(mono if is_one else f"{tok}*{mono}")
    return " + ".join(parts)
