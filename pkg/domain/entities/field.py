"""
Domain Layer - Finite Field Entities

GF(p^m) with a designated primitive element t. Elements are stored in log
form (ZERO or an exponent of t); addition goes through a Zech logarithm
table. Dense numpy tables over the "code" encoding (0 = zero, e + 1 = t^e)
feed the vectorised linear algebra and distance enumeration.
"""
from dataclasses import dataclass, field as dataclass_field
from functools import cached_property, lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import galois
import numpy as np
from sympy import isprime

from domain.errors import FieldConstructionError, FieldMismatchError, NonUnitError, ParseError
from utils.config import CONWAY_MODULI, MAX_TABLE_ORDER


def _poly_mulmod(a: Sequence[int], b: Sequence[int], modulus: Sequence[int], p: int) -> Tuple[int, ...]:
    """Multiply two coefficient vectors over GF(p) and reduce by a monic modulus."""
    m = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for deg in range(len(prod) - 1, m - 1, -1):
        c = prod[deg]
        if c:
            for j in range(m + 1):
                prod[deg - m + j] = (prod[deg - m + j] - c * modulus[j]) % p
    return tuple(prod[:m]) + (0,) * max(0, m - len(prod))


def default_modulus(p: int, m: int) -> List[int]:
    """Conway polynomial for GF(p^m), ascending coefficients."""
    if (p, m) in CONWAY_MODULI:
        return list(CONWAY_MODULI[(p, m)])
    try:
        poly = galois.conway_poly(p, m)
    except LookupError as e:
        raise FieldConstructionError(
            f"no Conway polynomial known for GF({p}^{m}); supply a modulus"
        ) from e
    return [int(c) for c in reversed(poly.coeffs)]


@dataclass(frozen=True, eq=False)
class FieldTables:
    """Dense operation tables over element codes (0 = zero, e + 1 = t^e)."""
    add: np.ndarray
    sub: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    inv: np.ndarray


@dataclass(frozen=True)
class FieldSpec:
    """
    GF(p^m) = GF(p)[x]/(modulus) with primitive element t.

    `primitive` is the coefficient vector of t; by default t is the class
    of x (for m = 1, the root of the linear modulus).
    """
    p: int
    m: int
    modulus: Tuple[int, ...]
    primitive: Optional[Tuple[int, ...]] = None
    label: str = dataclass_field(default="", compare=False)

    def __post_init__(self):
        """Validate the parameters and build log/antilog/Zech tables"""
        if not isinstance(self.p, int) or not isprime(self.p):
            raise FieldConstructionError(f"characteristic {self.p} is not prime")
        if self.m < 1:
            raise FieldConstructionError(f"extension degree must be >= 1, got {self.m}")
        modulus = tuple(int(c) for c in self.modulus)
        if len(modulus) != self.m + 1 or modulus[-1] != 1:
            raise FieldConstructionError(
                f"modulus {list(modulus)} is not monic of degree {self.m}"
            )
        if any(not 0 <= c < self.p for c in modulus):
            raise FieldConstructionError(f"modulus coefficients must lie in [0, {self.p})")
        object.__setattr__(self, "modulus", modulus)

        if self.m > 1:
            poly = galois.Poly(list(reversed(modulus)), field=galois.GF(self.p))
            if not poly.is_irreducible():
                raise FieldConstructionError(f"modulus {list(modulus)} is reducible over GF({self.p})")

        if self.primitive is None:
            gen = (0, 1) + (0,) * (self.m - 2) if self.m > 1 else ((-modulus[0]) % self.p,)
        else:
            gen = tuple(int(c) % self.p for c in self.primitive)
            if len(gen) != self.m:
                raise FieldConstructionError("primitive element vector has the wrong length")
        object.__setattr__(self, "primitive", gen)

        order = self.p ** self.m - 1
        exp_table: List[Tuple[int, ...]] = []
        log_table: Dict[Tuple[int, ...], int] = {}
        cur = (1,) + (0,) * (self.m - 1)
        for e in range(order):
            if cur in log_table:
                raise FieldConstructionError(
                    f"t has order {e} < {order}; it is not primitive"
                )
            log_table[cur] = e
            exp_table.append(cur)
            cur = _poly_mulmod(cur, gen, modulus, self.p)
        if cur != exp_table[0]:
            raise FieldConstructionError("t^(q-1) != 1; modulus or generator is inconsistent")

        # zech[n] = log(1 + t^n), -1 when 1 + t^n = 0
        zech = []
        for e in range(order):
            vec = list(exp_table[e])
            vec[0] = (vec[0] + 1) % self.p
            zech.append(log_table.get(tuple(vec), -1))

        object.__setattr__(self, "_exp", exp_table)
        object.__setattr__(self, "_log", log_table)
        object.__setattr__(self, "_zech", zech)
        object.__setattr__(self, "_neg_shift", 0 if self.p == 2 else order // 2)

    # -- basic facts -------------------------------------------------------

    @property
    def q(self) -> int:
        return self.p ** self.m

    @property
    def order(self) -> int:
        """Multiplicative group order q - 1"""
        return self.q - 1

    @property
    def name(self) -> str:
        return self.label or f"GF({self.q})"

    def __repr__(self) -> str:
        return f"FieldSpec({self.name}, modulus={list(self.modulus)})"

    # -- element constructors ---------------------------------------------

    def zero(self) -> "FieldElement":
        return FieldElement(self, None)

    def one(self) -> "FieldElement":
        return FieldElement(self, 0)

    def t(self) -> "FieldElement":
        return FieldElement(self, 1 % self.order)

    def power(self, e: int) -> "FieldElement":
        """t^e with e reduced mod q - 1"""
        return FieldElement(self, e % self.order)

    def from_vector(self, vec: Sequence[int]) -> "FieldElement":
        vec = tuple(int(c) % self.p for c in vec) + (0,) * (self.m - len(vec))
        if len(vec) != self.m:
            raise ParseError(f"vector {vec} longer than extension degree {self.m}")
        if not any(vec):
            return self.zero()
        return FieldElement(self, self._log[vec])

    def from_int(self, n: int) -> "FieldElement":
        """Base-p integer representation (least significant digit = constant term)"""
        digits = []
        for _ in range(self.m):
            n, d = divmod(n, self.p)
            digits.append(d)
        return self.from_vector(digits)

    def literal(self, c: int) -> "FieldElement":
        """Prime-subfield literal c = 1 + 1 + ... (c times)"""
        return self.from_vector((c % self.p,))

    def from_code(self, code: int) -> "FieldElement":
        return FieldElement(self, None if code == 0 else int(code) - 1)

    def elements(self) -> Iterator["FieldElement"]:
        """All elements in code order: 0, 1, t, t^2, ..."""
        yield self.zero()
        for e in range(self.order):
            yield FieldElement(self, e)

    def nonzero_elements(self) -> Iterator["FieldElement"]:
        for e in range(self.order):
            yield FieldElement(self, e)

    def random_element(self, rng: np.random.Generator, nonzero: bool = False) -> "FieldElement":
        if nonzero:
            return FieldElement(self, int(rng.integers(self.order)))
        return self.from_code(int(rng.integers(self.q)))

    # -- raw exponent arithmetic (used by FieldElement) ---------------------

    def vector_of(self, exp: Optional[int]) -> Tuple[int, ...]:
        if exp is None:
            return (0,) * self.m
        return self._exp[exp]

    def add_exp(self, x: Optional[int], y: Optional[int]) -> Optional[int]:
        if x is None:
            return y
        if y is None:
            return x
        z = self._zech[(y - x) % self.order]
        if z < 0:
            return None
        return (x + z) % self.order

    def neg_exp(self, x: Optional[int]) -> Optional[int]:
        if x is None:
            return None
        return (x + self._neg_shift) % self.order

    def frobenius_exp(self, x: Optional[int], i: int) -> Optional[int]:
        if x is None:
            return None
        return (x * pow(self.p, i % self.m, self.order)) % self.order if self.order > 1 else 0

    def in_prime_subfield(self, exp: Optional[int]) -> bool:
        return not any(self.vector_of(exp)[1:])

    # -- dense tables ------------------------------------------------------

    @cached_property
    def tables(self) -> FieldTables:
        """Operation tables over codes; only for q <= MAX_TABLE_ORDER."""
        q, order = self.q, self.order
        if q > MAX_TABLE_ORDER:
            raise FieldConstructionError(
                f"dense tables for GF({q}) exceed MAX_TABLE_ORDER={MAX_TABLE_ORDER}"
            )
        exps = np.arange(order, dtype=np.int64)
        zech = np.asarray(self._zech, dtype=np.int64)

        add = np.zeros((q, q), dtype=np.int32)
        diff = (exps[None, :] - exps[:, None]) % order
        z = zech[diff]
        add[1:, 1:] = np.where(z < 0, 0, (exps[:, None] + z) % order + 1)
        add[0, :] = np.arange(q)
        add[:, 0] = np.arange(q)

        mul = np.zeros((q, q), dtype=np.int32)
        mul[1:, 1:] = (exps[:, None] + exps[None, :]) % order + 1

        neg = np.zeros(q, dtype=np.int32)
        neg[1:] = (exps + self._neg_shift) % order + 1
        inv = np.zeros(q, dtype=np.int32)
        inv[1:] = (-exps) % order + 1

        sub = add[:, neg]
        for arr in (add, sub, mul, neg, inv):
            arr.setflags(write=False)
        return FieldTables(add=add, sub=sub, mul=mul, neg=neg, inv=inv)

    def frobenius_table(self, i: int) -> np.ndarray:
        """Code-level table of a -> a^(p^i)"""
        out = np.zeros(self.q, dtype=np.int32)
        for e in range(self.order):
            out[e + 1] = self.frobenius_exp(e, i) + 1
        return out

    def galois_field(self):
        """Equivalent galois.GF instance (same modulus), for cross-checks."""
        if self.m == 1:
            return galois.GF(self.p)
        poly = galois.Poly(list(reversed(self.modulus)), field=galois.GF(self.p))
        return galois.GF(self.p ** self.m, irreducible_poly=poly)


@lru_cache(maxsize=None)
def _cached_field(p: int, m: int, modulus: Tuple[int, ...], label: str) -> FieldSpec:
    return FieldSpec(p=p, m=m, modulus=modulus, label=label)


def get_field(p: int, m: int = 1, modulus: Optional[Sequence[int]] = None, label: str = "") -> FieldSpec:
    """
    Shared FieldSpec instance for (p, m, modulus).

    Args:
        p: Prime characteristic
        m: Extension degree
        modulus: Ascending monic coefficients; Conway polynomial when omitted
        label: Display name

    Returns:
        Cached FieldSpec
    """
    if modulus is None:
        modulus = default_modulus(p, m)
    return _cached_field(p, m, tuple(int(c) for c in modulus), label)


@dataclass(frozen=True, slots=True)
class FieldElement:
    """Element of GF(p^m): exp is None for zero, otherwise t^exp."""
    field: FieldSpec
    exp: Optional[int]

    def _check(self, other: "FieldElement"):
        if self.field is not other.field and self.field != other.field:
            raise FieldMismatchError(f"{self.field.name} vs {other.field.name}")

    @property
    def is_zero(self) -> bool:
        return self.exp is None

    @property
    def is_one(self) -> bool:
        return self.exp == 0

    @property
    def code(self) -> int:
        return 0 if self.exp is None else self.exp + 1

    @property
    def vector(self) -> Tuple[int, ...]:
        """Coefficients over GF(p), ascending in the modulus variable"""
        return self.field.vector_of(self.exp)

    def to_int(self) -> int:
        return sum(c * self.field.p ** j for j, c in enumerate(self.vector))

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field, self.field.add_exp(self.exp, other.exp))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field, self.field.add_exp(self.exp, self.field.neg_exp(other.exp)))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, self.field.neg_exp(self.exp))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        if self.exp is None or other.exp is None:
            return FieldElement(self.field, None)
        return FieldElement(self.field, (self.exp + other.exp) % self.field.order)

    def inverse(self) -> "FieldElement":
        if self.exp is None:
            raise NonUnitError("zero has no inverse")
        return FieldElement(self.field, (-self.exp) % self.field.order)

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return self * other.inverse()

    def __pow__(self, n: int) -> "FieldElement":
        if self.exp is None:
            if n <= 0:
                raise NonUnitError("zero to a non-positive power")
            return self
        return FieldElement(self.field, (self.exp * n) % self.field.order)

    def frobenius(self, i: int) -> "FieldElement":
        return FieldElement(self.field, self.field.frobenius_exp(self.exp, i))

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"<{format_element(self)} in {self.field.name}>"


# -- module-level operations -------------------------------------------------

def ff_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def ff_inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def frobenius(a: FieldElement, i: int) -> FieldElement:
    """a -> a^(p^i); i taken mod m"""
    return a.frobenius(i)


def parse_element(token: str, spec: FieldSpec) -> FieldElement:
    """
    Parse an element token.

    Grammar: `0` | `t^k` | `t` | decimal literal 1..p-1. Braces are ignored
    so `t^{17}` is accepted.

    Raises:
        ParseError: malformed token or literal >= p
    """
    tok = token.strip().replace("{", "").replace("}", "").replace(" ", "")
    if not tok:
        raise ParseError("empty field element token")
    negate = tok.startswith("-")
    if negate:
        tok = tok[1:]
    if tok.isdigit():
        c = int(tok)
        if c >= spec.p:
            raise ParseError(f"literal {c} is not below the characteristic {spec.p}")
        value = spec.literal(c)
    elif tok == "t":
        value = spec.t()
    elif tok.startswith("t^") and tok[2:].isdigit():
        value = spec.power(int(tok[2:]))
    else:
        raise ParseError(f"malformed field element token {token!r}")
    return -value if negate else value


def format_element(a: FieldElement) -> str:
    """Canonical token: prime-subfield elements as literals, others as t^k."""
    if a.exp is None:
        return "0"
    if a.field.in_prime_subfield(a.exp):
        return str(a.vector[0])
    if a.exp == 1:
        return "t"
    return f"t^{a.exp}"
