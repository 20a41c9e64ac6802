"""
Unit tests for the divisor search, admissible l and factorization checks.
"""
import os

import numpy as np
import pytest

from application.use_cases.verify_factorizations_use_case import (
    STATUS_FAIL,
    STATUS_INCONSISTENT,
    VerifyFactorizationsUseCase,
)
from domain.entities.field import get_field
from domain.entities.skew_poly import SkewPoly, is_right_divisor, parse_poly, right_divmod, right_rem, s_mul
from domain.errors import BudgetExceededError
from domain.services.divisor_search import (
    admissible_l_basis,
    random_admissible_l,
    right_divisors_search,
    verify_factorization,
)
from infrastructure.repositories import JsonJobRepository


class TestRightDivisorsSearch:
    """Monic right divisors of x^n - 1"""

    def test_linear_factors_of_x3_minus_1_over_gf4(self):
        """x^3 - 1 splits into (x - 1)(x - t)(x - t^2) when theta is the identity"""
        # Arrange
        spec = get_field(2, 2)

        # Act
        found = right_divisors_search(3, 1, spec, 0, budget=100, workers=2)

        # Assert
        roots = {f.coefficient(0) for f in found}
        assert roots == {spec.one(), spec.t(), spec.power(2)}

    @pytest.mark.parametrize("p,m,n", [(2, 2, 4), (3, 2, 4), (2, 3, 3)])
    def test_every_result_divides(self, p, m, n):
        spec = get_field(p, m)
        target = SkewPoly.x_n_minus_one(spec, 1, n)
        for d in range(n + 1):
            for f in right_divisors_search(n, d, spec, 1, budget=10 ** 5):
                assert f.is_monic() and f.degree == d
                assert is_right_divisor(f, target)

    def test_extreme_degrees(self):
        spec = get_field(2, 2)
        assert right_divisors_search(4, 0, spec, 1) == [SkewPoly.one(spec, 1)]
        assert right_divisors_search(4, 4, spec, 1) == [SkewPoly.x_n_minus_one(spec, 1, 4)]
        assert right_divisors_search(4, 5, spec, 1) == []

    def test_order_does_not_depend_on_workers(self):
        spec = get_field(3, 2)
        one = right_divisors_search(4, 2, spec, 1, budget=10 ** 4, workers=1)
        many = right_divisors_search(4, 2, spec, 1, budget=10 ** 4, workers=5)
        assert one == many

    def test_budget_refusal(self):
        spec = get_field(2, 2)
        with pytest.raises(BudgetExceededError) as info:
            right_divisors_search(4, 3, spec, 1, budget=10)
        assert info.value.required == 64
        assert info.value.budget == 10


class TestAdmissibleL:
    """l with g |_r ((x^s - 1)/h) * l"""

    def setup_method(self):
        self.spec = get_field(2, 2)
        self.rng = np.random.default_rng(5)

    def test_basis_elements_are_admissible(self):
        for r, s in [(2, 2), (4, 2), (3, 3), (4, 4)]:
            gs = [f for d in range(1, r + 1) for f in right_divisors_search(r, d, self.spec, 1, budget=10 ** 4)]
            hs = [f for d in range(s + 1) for f in right_divisors_search(s, d, self.spec, 1, budget=10 ** 4)]
            xs = SkewPoly.x_n_minus_one(self.spec, 1, s)
            for g in gs[:4]:
                for h in hs[:4]:
                    u = right_divmod(xs, h).quot
                    for l in admissible_l_basis(g, h, s):
                        assert l.degree < g.degree
                        assert right_rem(s_mul(u, l), g).is_zero

    def test_random_l_is_admissible(self):
        g = parse_poly("x + 1", self.spec, 1)
        h = SkewPoly.one(self.spec, 1)
        xs = SkewPoly.x_n_minus_one(self.spec, 1, 2)
        for _ in range(20):
            l = random_admissible_l(g, h, 2, self.rng)
            assert right_rem(s_mul(xs, l), g).is_zero

    def test_constant_g_admits_only_zero(self):
        one = SkewPoly.one(self.spec, 1)
        assert admissible_l_basis(one, one, 3) == []


class TestFactorizations:
    """x^n - 1 = left * right"""

    def test_commutative_factorization(self):
        spec = get_field(2, 2)
        outcome = verify_factorization(3, parse_poly("x^2 + x + 1", spec, 0), parse_poly("x + 1", spec, 0))
        assert outcome.product_matches
        assert outcome.right_divides
        assert outcome.quotient_matches
        assert outcome.degree_consistent

    def test_wrong_left_factor(self):
        spec = get_field(2, 2)
        outcome = verify_factorization(3, parse_poly("x^2 + 1", spec, 0), parse_poly("x + 1", spec, 0))
        assert not outcome.product_matches
        assert outcome.right_divides
        assert not outcome.quotient_matches

    def test_shipped_factorizations(self, data_path):
        # Arrange
        use_case = VerifyFactorizationsUseCase(JsonJobRepository())

        # Act
        report = use_case.execute(os.path.join(data_path, "factorizations.json"))

        # Assert
        by_label = {c.label: c for c in report.checks}
        assert len(by_label) == 7
        assert all(c.status != STATUS_FAIL for c in report.checks)
        assert by_label["gf27-x3-h_v"].status == STATUS_INCONSISTENT
        assert by_label["gf27-x3-h_vp"].status == STATUS_INCONSISTENT
        assert by_label["gf27-x3-h_v"].right_divides
