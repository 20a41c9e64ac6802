"""
Unit tests for dual codes and the circle product.
"""
import numpy as np
import pytest

from application.use_cases.common import failed_binding
from domain.entities import DoubleCodeSpec, DoubleWord
from domain.entities.field import get_field
from domain.entities.ring import random_ring_element
from domain.entities.skew_poly import decompose, parse_poly
from domain.services.double_code_ops import code_gray_matrix, spanning_set, validate
from domain.services.dual import (
    cardinality_exponents,
    central_moduli,
    circle,
    circle_all_shifts_check,
    closed_form_checks,
    dual_checks,
    dual_g_bar,
    dual_generator_words,
    dual_generators,
    dual_h_bar,
    dual_l_bar,
    l_bar_form_checks,
    inner_product,
    theta_order,
    word_polys,
    xi,
)


class TestDualGenerators:
    """Dual of random valid codes"""

    def setup_method(self):
        self.rng = np.random.default_rng(31)

    @pytest.mark.parametrize("p,m,i", [(2, 2, 1), (2, 2, 0), (3, 2, 1)])
    def test_binding_checks_hold(self, random_code, p, m, i):
        spec = get_field(p, m)
        for _ in range(8):
            # Arrange
            r, s = (int(x) for x in self.rng.integers(1, 4, size=2))
            code = random_code(spec, i, r, s, self.rng)

            # Act
            dual = dual_generators(code)
            checks = dual_checks(code, dual)

            # Assert
            assert failed_binding(checks) == [], [str(c.to_dict()) for c in failed_binding(checks)]

    def test_dimensions_add_up(self, random_code):
        spec = get_field(2, 2)
        for _ in range(10):
            r, s = (int(x) for x in self.rng.integers(1, 4, size=2))
            code = random_code(spec, 1, r, s, self.rng)
            dual = dual_generators(code)
            k = code_gray_matrix(code).rank
            assert k + dual.parity.rank == 2 * (r + s)
            assert dual.gamma == np.lcm(r, s)

    def test_dual_code_is_valid_and_orthogonal(self, random_code):
        spec = get_field(2, 2)
        for _ in range(6):
            code = random_code(spec, 1, 2, 2, self.rng)
            dual = dual_generators(code)
            assert validate(dual.dual_code).is_valid
            for a in spanning_set(code):
                for b in dual_generator_words(dual):
                    assert inner_product(a, b).is_zero

    def test_cardinality_exponents_pair_up(self, random_code):
        """|C_r| |(C_r)^perp| = q^(2r) and |C_s| |(C_s)^perp| = q^(2s)"""
        spec = get_field(3, 2)
        for _ in range(6):
            r, s = (int(x) for x in self.rng.integers(1, 4, size=2))
            code = random_code(spec, 1, r, s, self.rng)
            exps = cardinality_exponents(code)
            assert exps["C_r"] + exps["C_r_perp"] == 2 * r
            assert exps["C_s"] + exps["C_s_perp"] == 2 * s


class TestCircleProduct:
    """alpha o beta = 0 exactly when every shift of alpha is orthogonal to beta"""

    def setup_method(self):
        self.spec = get_field(2, 2)
        self.rng = np.random.default_rng(37)

    def random_word(self, r, s):
        return DoubleWord(
            tuple(random_ring_element(self.spec, self.rng) for _ in range(r)),
            tuple(random_ring_element(self.spec, self.rng) for _ in range(s)),
        )

    def test_agrees_with_shifted_inner_products(self):
        for _ in range(200):
            a, b = self.random_word(2, 2), self.random_word(2, 2)
            vanishes = circle(word_polys(a, 1), word_polys(b, 1), 2, 2).is_zero
            assert vanishes == circle_all_shifts_check(a, b, 1)

    def test_vanishes_on_code_and_dual(self, random_code):
        for _ in range(5):
            code = random_code(self.spec, 1, 2, 4, self.rng)
            dual = dual_generators(code)
            for a in spanning_set(code):
                for b in dual_generator_words(dual):
                    assert circle(word_polys(a, 1), word_polys(b, 1), 2, 4).is_zero

    def test_zero_word(self):
        zero = DoubleWord.zero(self.spec, 2, 2)
        b = self.random_word(2, 2)
        assert circle(word_polys(zero, 1), word_polys(b, 1), 2, 2).is_zero
        assert circle_all_shifts_check(zero, b, 1)


class TestHelpers:
    def test_theta_order(self):
        assert theta_order(get_field(3, 3), 1) == 3
        assert theta_order(get_field(2, 4), 2) == 2
        assert theta_order(get_field(2, 4), 0) == 1

    def test_xi(self):
        spec = get_field(2, 2)
        assert xi(spec, 0, 3) == parse_poly("x^2 + x + 1", spec, 0)
        assert xi(spec, 1, 2, stride=3) == parse_poly("x^3 + 1", spec, 1)
        with pytest.raises(ValueError):
            xi(spec, 0, 0)


class TestClosedForms:
    """Reciprocal formulas against the dual computed by linear algebra"""

    def setup_method(self):
        self.spec = get_field(2, 2)
        self.rng = np.random.default_rng(43)

    @pytest.mark.parametrize("r,s", [(2, 2), (2, 4), (4, 4)])
    def test_match_computed_dual_when_central(self, random_code, r, s):
        for _ in range(15):
            # Arrange
            code = random_code(self.spec, 1, r, s, self.rng)
            dual = dual_generators(code)

            # Act
            checks = closed_form_checks(code, dual, central_moduli(code))

            # Assert
            assert all(c.binding for c in checks)
            assert [c for c in checks if not c.passed] == []
            assert dual_g_bar(code) == dual.g_bar
            assert dual_h_bar(code) == dual.h_bar

    def test_not_binding_when_not_central(self, random_code):
        """ord(theta) = 3 over GF(8) does not divide r = 2"""
        spec = get_field(2, 3)
        code = random_code(spec, 1, 2, 3, self.rng)
        dual = dual_generators(code)
        assert not central_moduli(code)
        closed = [c for c in dual_checks(code, dual) if "closed form" in c.name or "circle" in c.name]
        assert closed and not any(c.binding for c in closed)

    def test_g_bar_is_monic_reciprocal_of_the_check_polynomial(self):
        """Over GF(4) with theta the identity, x^3 - 1 = (x^2 + x + 1)(x + 1)"""
        def p(text):
            return parse_poly(text, self.spec, 0)

        code = DoubleCodeSpec(self.spec, 0, 3, 3, p("x + 1"), p("x + 1"), p("0"), p("0"),
                              p("x^3 + 1"), p("x^3 + 1"))
        g_bar_v, g_bar_vp = decompose(dual_g_bar(code))
        assert g_bar_v == g_bar_vp == p("x^2 + x + 1")

    def test_dual_l_bar(self, random_code):
        for _ in range(5):
            code = random_code(self.spec, 1, 2, 4, self.rng)
            dual = dual_generators(code)
            l_bar = dual_l_bar(code)
            assert l_bar == dual.l_bar
            for part, g_bar in zip(decompose(l_bar), decompose(dual.g_bar)):
                assert part.is_zero or part.degree < g_bar.degree
            assert all(c.passed for c in l_bar_form_checks(code, dual, True))


@pytest.mark.slow
class TestDualAtScale:
    """Binding dual checks on codes with r, s up to 6 over GF(4) and GF(9)"""

    @pytest.mark.parametrize("p,m", [(2, 2), (3, 2)])
    def test_binding_checks_hold(self, random_code, p, m):
        spec = get_field(p, m)
        rng = np.random.default_rng(47 + p)
        for count in range(60):
            r, s = (int(x) for x in rng.integers(1, 7, size=2))
            code = random_code(spec, count % 2, r, s, rng)
            checks = dual_checks(code, dual_generators(code))
            assert failed_binding(checks) == [], (r, s, [c.to_dict() for c in failed_binding(checks)])


@pytest.mark.slow
class TestCircleAtScale:
    """Random pairs and (C, C^perp) pairs over GF(4) with central moduli"""

    def setup_method(self):
        self.spec = get_field(2, 2)
        self.rng = np.random.default_rng(53)

    def random_word(self, r, s):
        return DoubleWord(
            tuple(random_ring_element(self.spec, self.rng) for _ in range(r)),
            tuple(random_ring_element(self.spec, self.rng) for _ in range(s)),
        )

    def combination(self, words, r, s):
        total = DoubleWord.zero(self.spec, r, s)
        for w in words:
            total = total + w.scale(random_ring_element(self.spec, self.rng))
        return total

    @pytest.mark.parametrize("r,s", [(2, 2), (2, 4)])
    def test_random_pairs(self, r, s):
        for _ in range(5000):
            a, b = self.random_word(r, s), self.random_word(r, s)
            vanishes = circle(word_polys(a, 1), word_polys(b, 1), r, s).is_zero
            assert vanishes == circle_all_shifts_check(a, b, 1)

    @pytest.mark.parametrize("r,s", [(2, 2), (2, 4), (4, 4)])
    def test_code_and_dual_pairs(self, random_code, r, s):
        for _ in range(20):
            code = random_code(self.spec, 1, r, s, self.rng)
            primal = spanning_set(code)
            dual = dual_generator_words(dual_generators(code))
            for _ in range(25):
                a, b = self.combination(primal, r, s), self.combination(dual, r, s)
                assert circle(word_polys(a, 1), word_polys(b, 1), r, s).is_zero
                assert circle_all_shifts_check(a, b, 1)
