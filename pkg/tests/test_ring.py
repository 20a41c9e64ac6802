"""
Unit tests for R = F_q + vF_q.
"""
import numpy as np
import pytest

from domain.entities.field import get_field
from domain.entities.ring import (
    RingElement,
    crt_join,
    crt_split,
    format_ring_element,
    parse_ring_element,
    random_ring_element,
)
from domain.errors import NonUnitError, ParseError


class TestRingElement:
    """Ring arithmetic through the idempotent decomposition"""

    def setup_method(self):
        self.spec = get_field(2, 2)
        self.rng = np.random.default_rng(7)

    def test_v_is_idempotent(self):
        v = RingElement.v(self.spec)
        vp = RingElement.v_prime(self.spec)
        assert v * v == v
        assert vp * vp == vp
        assert (v * vp).is_zero
        assert v + vp == RingElement.one(self.spec)

    def test_crt_roundtrip(self):
        for _ in range(50):
            x = random_ring_element(self.spec, self.rng)
            assert crt_join(*crt_split(x)) == x

    def test_multiplication_is_bilinear_expansion(self):
        """(a + vb)(c + vd) = ac + v(ad + bc + bd)"""
        for _ in range(100):
            x = random_ring_element(self.spec, self.rng)
            y = random_ring_element(self.spec, self.rng)
            expected = RingElement(x.a * y.a, x.a * y.b + x.b * y.a + x.b * y.b)
            assert x * y == expected

    def test_units_and_zero_divisors(self):
        v = RingElement.v(self.spec)
        assert not v.is_unit()
        with pytest.raises(NonUnitError):
            v.inverse()
        for _ in range(50):
            x = random_ring_element(self.spec, self.rng)
            if x.is_unit():
                assert x * x.inverse() == RingElement.one(self.spec)

    def test_theta_fixes_v_and_is_multiplicative(self):
        v = RingElement.v(self.spec)
        assert v.theta(1) == v
        for _ in range(50):
            x = random_ring_element(self.spec, self.rng)
            y = random_ring_element(self.spec, self.rng)
            assert (x * y).theta(1) == x.theta(1) * y.theta(1)


class TestRingText:
    def setup_method(self):
        self.spec = get_field(3, 2)

    def test_parse_forms(self):
        t = self.spec.t()
        assert parse_ring_element("t + v*t^2", self.spec) == RingElement(t, t * t)
        assert parse_ring_element("v", self.spec) == RingElement.v(self.spec)
        assert parse_ring_element("t^3*v", self.spec) == RingElement(self.spec.zero(), t ** 3)

    def test_format_then_parse(self):
        x = RingElement(self.spec.power(3), self.spec.power(5))
        assert parse_ring_element(format_ring_element(x), self.spec) == x

    def test_empty_rejected(self):
        with pytest.raises(ParseError):
            parse_ring_element("  ", self.spec)
