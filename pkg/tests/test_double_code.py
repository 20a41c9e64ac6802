"""
Unit tests for double skew cyclic code validation, spanning sets and
bookkeeping.
"""
import numpy as np
import pytest

from domain.entities import DoubleCodeSpec
from domain.entities.field import get_field
from domain.entities.gray import default_n
from domain.entities.skew_poly import SkewPoly, decompose, parse_poly, right_rem
from domain.errors import FieldMismatchError, InvalidCodeError
from domain.services.double_code_ops import (
    cardinality,
    code_gray_matrix,
    contains,
    divisibility_corollaries,
    generator_matrix_R,
    module_condition_checks,
    module_condition_holds,
    normalize_l,
    punctured_generators,
    require_valid,
    shift_closure_check,
    spanning_set,
    structure_degrees,
    t_shift,
    validate,
)
from domain.services.gray_map import phi_matrix


def example1():
    spec = get_field(3, 3)

    def p(text):
        return parse_poly(text, spec, 1)

    return DoubleCodeSpec(
        spec, 1, 6, 3,
        p("x^3 + t^17*x^2 + t^22*x + t^25"), p("x^3 + t^19*x^2 + t^21*x + 1"),
        p("x^2 + t^2*x + t"), p("x^2 + t^5*x + t^2"),
        p("x + t^25"), p("x + t^19"),
        "example1",
    )


def unclosed_gf4_code():
    spec = get_field(2, 2)

    def p(text):
        return parse_poly(text, spec, 0)

    return DoubleCodeSpec(spec, 0, 3, 3, p("x + 1"), p("x + 1"), p("1"), p("0"), p("x + 1"), p("x + 1"), "unclosed")


class TestValidation:
    """Generator conditions"""

    def test_example_code_is_valid(self):
        # Arrange
        code = example1()

        # Act
        report = validate(code)

        # Assert
        assert report.is_valid, [str(v) for v in report.violations]
        assert report.code.expected_dimension == 10

    def test_non_monic_generator_reported(self):
        code = example1()
        spec = code.field
        bad = DoubleCodeSpec(spec, 1, 6, 3, parse_poly("t*x^3 + 1", spec, 1), code.g_vp,
                             code.l_v, code.l_vp, code.h_v, code.h_vp)
        report = validate(bad)
        assert not report.is_valid
        assert report.code is None
        assert any(v.condition == "g_v monic" for v in report.violations)

    def test_require_valid_raises_with_the_report(self):
        code = example1()
        spec = code.field
        bad = DoubleCodeSpec(spec, 1, 6, 3, parse_poly("t*x^3 + 1", spec, 1), code.g_vp,
                             code.l_v, code.l_vp, code.h_v, code.h_vp)
        assert require_valid(code).expected_dimension == 10
        with pytest.raises(InvalidCodeError) as err:
            require_valid(bad)
        assert not err.value.report.is_valid

    def test_l_condition_does_not_gate_validation(self):
        """x + 1 does not divide (x^3 - 1)/(x + 1) * 1 = x^2 + x + 1 over GF(4)"""
        # Arrange
        code = unclosed_gf4_code()

        # Act
        report = validate(code)
        checks = {c.component: c for c in module_condition_checks(code)}

        # Assert
        assert report.is_valid
        assert not checks["v"].passed
        assert checks["v'"].passed
        assert not any(c.binding for c in checks.values())

    def test_component_polynomials_must_share_the_automorphism(self):
        spec = get_field(3, 3)
        one = parse_poly("1", spec, 1)
        other = parse_poly("1", spec, 2)
        with pytest.raises(FieldMismatchError):
            DoubleCodeSpec(spec, 1, 2, 2, one, one, one, one, one, other)

    def test_normalize_reduces_l_modulo_g(self):
        code = example1()
        long_l = code.with_l(parse_poly("x^4 + t*x", code.field, 1), code.l_vp)
        normalized = normalize_l(long_l)
        assert normalized.l_v == right_rem(long_l.l_v, code.g_v)
        assert normalized.l_v.degree < code.g_v.degree


class TestSpanningSet:
    """Spanning set and its Gray image"""

    def setup_method(self):
        self.code = validate(example1()).code
        self.rng = np.random.default_rng(29)

    def test_example_gray_image_has_expected_shape(self):
        matrix = code_gray_matrix(self.code)
        assert (matrix.rows, matrix.n) == (10, 18)
        assert matrix.rank == 10

    def test_matrix_over_r_matches_spanning_set(self):
        # Arrange
        words = spanning_set(self.code)

        # Act
        over_r = generator_matrix_R(self.code)
        image = phi_matrix(over_r.rows, default_n(self.code.field), self.code.n)

        # Assert
        assert over_r.shape == (10, 9)
        assert over_r.rows == tuple(w.coordinates for w in words)
        assert np.array_equal(image.entries, code_gray_matrix(self.code).entries)
        assert image.rank == len(words)

    def test_spanning_words_and_their_shifts_are_codewords(self, random_code):
        spec = get_field(3, 2)
        for _ in range(6):
            r, s = (int(x) for x in self.rng.integers(1, 5, size=2))
            code = random_code(spec, 1, r, s, self.rng)
            matrix = code_gray_matrix(code)
            for word in spanning_set(code):
                assert contains(code, word, matrix=matrix)
                assert contains(code, t_shift(word, code.i), matrix=matrix)

    def test_shift_closure_check_passes_on_closed_codes(self, random_code):
        spec = get_field(2, 2)
        for _ in range(8):
            r, s = (int(x) for x in self.rng.integers(1, 5, size=2))
            code = random_code(spec, 1, r, s, self.rng)
            check = shift_closure_check(code)
            assert check.passed and check.binding

    def test_zero_code_has_no_rows(self):
        spec = get_field(2, 2)
        xr = parse_poly("x^2 + 1", spec, 1)
        zero = parse_poly("0", spec, 1)
        code = DoubleCodeSpec(spec, 1, 2, 2, xr, xr, zero, zero, xr, xr, "zero")
        assert validate(code).is_valid
        matrix = code_gray_matrix(code)
        assert (matrix.rows, matrix.n, matrix.rank) == (0, 8, 0)


class TestModuleCondition:
    """Codes whose spanning set is not closed under the T-shift"""

    def test_example1_fails_on_both_components(self):
        # Arrange
        code = validate(example1()).code

        # Act
        checks = module_condition_checks(code)
        closure = shift_closure_check(code)

        # Assert
        assert [c.component for c in checks] == ["v", "v'"]
        assert not any(c.passed for c in checks)
        assert not module_condition_holds(code)
        assert not closure.passed
        assert not closure.binding

    def test_unclosed_code_is_still_built(self):
        code = validate(unclosed_gf4_code()).code
        matrix = code_gray_matrix(code)
        assert (matrix.rows, matrix.rank) == (code.expected_dimension, code.expected_dimension)
        assert not shift_closure_check(code, matrix=matrix).passed

    def test_closure_agrees_with_the_condition(self, random_code):
        """The condition holds exactly when the Gray image is T-shift closed"""
        spec = get_field(2, 2)
        rng = np.random.default_rng(31)
        seen = set()
        for _ in range(20):
            r, s = (int(x) for x in rng.integers(1, 4, size=2))
            code = random_code(spec, 0, r, s, rng)
            # with deg h_v = s there is no (l_v | h_v) row to shift
            if rng.integers(2) and code.h_v.degree < s:
                code = normalize_l(code.with_l(code.l_v + SkewPoly.one(spec, 0), code.l_vp))
            holds = module_condition_holds(code)
            assert shift_closure_check(code).passed == holds
            seen.add(holds)
        assert True in seen

    def test_corollaries_do_not_bind_without_the_condition(self):
        code = validate(example1()).code
        assert not any(c.binding for c in divisibility_corollaries(code))


class TestPuncturedGenerators:
    def test_zero_l_gives_g(self):
        code = unclosed_gf4_code()
        zero = code.with_l(code.l_vp, code.l_vp)
        left, right = punctured_generators(zero)
        assert decompose(left) == (code.g_v, code.g_vp)
        assert decompose(right) == (code.h_v, code.h_vp)

    def test_unit_l_gives_one(self):
        code = unclosed_gf4_code()
        left, _ = punctured_generators(code)
        gcd_v, gcd_vp = decompose(left)
        assert gcd_v.degree == 0
        assert gcd_vp == code.g_vp

    def test_degrees_match_projection_ranks(self, random_code):
        spec = get_field(2, 2)
        rng = np.random.default_rng(37)
        for _ in range(8):
            r, s = (int(x) for x in rng.integers(1, 5, size=2))
            code = random_code(spec, 1, r, s, rng)
            left, _ = punctured_generators(code)
            matrix = code_gray_matrix(code)
            assert matrix.columns(range(2 * r)).rank == sum(r - f.degree for f in decompose(left))


class TestBookkeeping:
    """Degrees, cardinalities and derived divisibilities on random codes"""

    def setup_method(self):
        self.rng = np.random.default_rng(23)

    @pytest.mark.parametrize("p,m,i", [(2, 2, 1), (3, 2, 1), (2, 2, 0)])
    def test_cardinality_matches_ranks(self, random_code, p, m, i):
        spec = get_field(p, m)
        for _ in range(10):
            r, s = (int(x) for x in self.rng.integers(1, 5, size=2))
            code = random_code(spec, i, r, s, self.rng)
            matrix = code_gray_matrix(code)
            card = cardinality(code)

            assert matrix.rank == card.total_exp == code.expected_dimension
            assert matrix.columns(range(2 * r)).rank == card.left_exp
            assert matrix.columns(range(2 * r, 2 * (r + s))).rank == card.right_exp

    def test_structure_degrees_measure_the_off_diagonal_block(self, random_code):
        """log_q |C_r| splits into the <g> part and k_v + k_v'"""
        spec = get_field(2, 2)
        for _ in range(10):
            r, s = (int(x) for x in self.rng.integers(1, 5, size=2))
            code = random_code(spec, 1, r, s, self.rng)
            k = structure_degrees(code)
            card = cardinality(code)
            g_part = sum(r - code.component(e)[0].degree for e in ("v", "v'"))
            assert card.left_exp == g_part + k["v"] + k["v'"]

    def test_binding_corollaries_hold(self, random_code):
        spec = get_field(2, 2)
        for _ in range(15):
            r, s = (int(x) for x in self.rng.integers(1, 5, size=2))
            code = random_code(spec, 1, r, s, self.rng)
            failed = [c for c in divisibility_corollaries(code) if c.binding and not c.passed]
            assert failed == []
