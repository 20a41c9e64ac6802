"""
Unit tests for the application use cases.

Repositories are mocked; codes are small enough for exact distances.
"""
from unittest.mock import Mock

import numpy as np

from application.use_cases.compute_dual_use_case import ComputeDualUseCase
from application.use_cases.compute_parameters_use_case import ComputeParametersUseCase
from application.use_cases.reproduce_table_use_case import PATH_PLAIN, ReproduceTableUseCase
from application.use_cases.run_construction_use_case import RunConstructionUseCase
from application.use_cases.search_codes_use_case import DegreeBounds, SearchCodesUseCase
from application.use_cases.verify_factorizations_use_case import VerifyFactorizationsUseCase
from application.use_cases.verify_fixture_use_case import VerifyFixtureUseCase
from domain.entities import (
    Budgets,
    CodeJob,
    CodeParameters,
    DoubleCodeSpec,
    FactorizationCase,
    LinearCodeMatrix,
    MatrixFixture,
)
from domain.entities.field import get_field, parse_element
from domain.entities.reports import BOUNDED, CONTRADICTION, INVALID, PASS, REFUSED
from domain.entities.skew_poly import parse_poly
from domain.interfaces import IJobRepository, IMatrixFixtureRepository
from domain.services.distance import min_distance_bz
from domain.services.double_code_ops import code_gray_matrix


def invalid_candidate():
    spec = get_field(2, 2)
    g = parse_poly("t*x + 1", spec, 1)
    one = parse_poly("1", spec, 1)
    return DoubleCodeSpec(spec, 1, 2, 2, g, one, one, one, one, one, "bad")


def zero_candidate():
    spec = get_field(2, 2)
    xr = parse_poly("x^2 + 1", spec, 1)
    zero = parse_poly("0", spec, 1)
    return DoubleCodeSpec(spec, 1, 2, 2, xr, xr, zero, zero, xr, xr, "zero")


def unclosed_candidate():
    """g = h = x + 1 and l_v = 1 over GF(4): valid, not T-shift closed"""
    spec = get_field(2, 2)

    def p(text):
        return parse_poly(text, spec, 0)

    return DoubleCodeSpec(spec, 0, 3, 3, p("x + 1"), p("x + 1"), p("1"), p("0"), p("x + 1"), p("x + 1"),
                          "unclosed")


class TestComputeParametersUseCase:
    """Test suite for ComputeParametersUseCase"""

    def setup_method(self):
        """Setup test fixtures"""
        self.mock_fixture_repo = Mock(spec=IMatrixFixtureRepository)
        self.mock_fixture_repo.save.side_effect = lambda path, *args: path
        self.use_case = ComputeParametersUseCase(self.mock_fixture_repo)
        self.spec = get_field(2, 2)
        self.rng = np.random.default_rng(61)

    def test_invalid_code_reported(self):
        # Arrange
        job = CodeJob("bad", invalid_candidate())

        # Act
        report = self.use_case.execute(job, matrix_out="out/bad.txt")

        # Assert
        assert report.status == INVALID
        assert report.exit_code == 2
        assert any(v["condition"] == "g_v monic" for v in report.violations)
        self.mock_fixture_repo.save.assert_not_called()

    def test_valid_code(self, random_code):
        # Arrange
        code = random_code(self.spec, 1, 2, 3, self.rng)
        job = CodeJob("random", code)

        # Act
        report = self.use_case.execute(job)

        # Assert
        assert report.status == PASS
        assert report.n == 10
        assert report.k == code.expected_dimension
        assert all(c.passed for c in report.checks if c.binding)
        self.mock_fixture_repo.save.assert_not_called()

    def test_matrix_is_saved(self, random_code):
        code = random_code(self.spec, 1, 2, 2, self.rng)
        report = self.use_case.execute(CodeJob("random", code), matrix_out="out/random.txt")

        self.mock_fixture_repo.save.assert_called_once()
        path, matrix, rank, d = self.mock_fixture_repo.save.call_args[0]
        assert path == "out/random.txt"
        assert matrix.n == 8 and rank == report.k
        assert report.matrix_path == "out/random.txt"

    def test_expected_dimension_mismatch_is_a_contradiction(self, random_code):
        code = random_code(self.spec, 1, 2, 2, self.rng)
        expected = CodeParameters(8, code.expected_dimension + 1)
        report = self.use_case.execute(CodeJob("random", code, expected=expected))
        assert report.status == CONTRADICTION
        assert report.exit_code == 1

    def test_zero_code(self):
        report = self.use_case.execute(CodeJob("zero", zero_candidate(), expected=CodeParameters(8, 0)))
        assert report.status == PASS
        assert report.k == 0
        assert report.distance.upper is None

    def test_budget_gives_bounds(self, random_code):
        code = random_code(get_field(3, 2), 1, 3, 3, self.rng)
        job = CodeJob("random", code, budgets=Budgets(ops=1))
        report = self.use_case.execute(job)
        assert report.status in (PASS, BOUNDED)
        if report.status == BOUNDED:
            assert not report.distance.exact

    def test_unclosed_code_is_measured(self):
        # Arrange
        job = CodeJob("unclosed", unclosed_candidate())

        # Act
        report = self.use_case.execute(job)

        # Assert
        assert report.status == PASS
        assert (report.n, report.k) == (12, 8)
        assert report.distance.exact
        checks = {(c.name, c.component): c for c in report.checks}
        assert not checks[("T-shift closure", "")].passed
        assert not checks[("T-shift closure", "")].binding
        assert not checks[("g |_r ((x^s-1)/h)*l", "v")].passed
        assert checks[("g |_r ((x^s-1)/h)*l", "v'")].passed
        assert checks[("Gray image of the matrix over R has full rank", "")].passed


class TestComputeDualUseCase:
    """Test suite for ComputeDualUseCase"""

    def setup_method(self):
        self.mock_fixture_repo = Mock(spec=IMatrixFixtureRepository)
        self.mock_fixture_repo.save.side_effect = lambda path, *args: path
        self.use_case = ComputeDualUseCase(self.mock_fixture_repo)
        self.rng = np.random.default_rng(67)

    def test_dual_of_random_code(self, random_code):
        # Arrange
        code = random_code(get_field(2, 2), 1, 2, 2, self.rng)

        # Act
        report = self.use_case.execute(CodeJob("random", code), matrix_out="out/dual.txt")

        # Assert
        assert report.status == PASS
        assert report.k + report.dual_k == report.n == 8
        parity = self.mock_fixture_repo.save.call_args[0][1]
        assert parity.rows == report.dual_k

    def test_unclosed_code_gets_parity_basis_only(self):
        # Act
        report = self.use_case.execute(CodeJob("unclosed", unclosed_candidate()), matrix_out="out/dual.txt")

        # Assert
        assert report.status == PASS
        assert report.generators is None
        assert "not T-shift closed" in report.message
        assert report.k + report.dual_k == report.n == 12
        assert all(c.passed for c in report.checks if c.binding)
        self.mock_fixture_repo.save.assert_called_once()

    def test_invalid_code(self):
        report = self.use_case.execute(CodeJob("bad", invalid_candidate()))
        assert report.status == INVALID
        assert report.violations


class TestRunConstructionUseCase:
    """Test suite for RunConstructionUseCase"""

    def setup_method(self):
        self.mock_fixture_repo = Mock(spec=IMatrixFixtureRepository)
        self.mock_fixture_repo.save.side_effect = lambda path, *args: path
        self.use_case = RunConstructionUseCase(self.mock_fixture_repo)
        self.rng = np.random.default_rng(71)

    def test_construction_of_random_code(self, random_code):
        code = random_code(get_field(2, 2), 1, 3, 2, self.rng)

        report = self.use_case.execute(CodeJob("random", code), matrix_out="out/construction.txt")

        assert report.status == PASS
        assert report.n == 10
        assert report.case == "r > s"
        assert report.rows == code_gray_matrix(code).rows
        self.mock_fixture_repo.save.assert_called_once()

    def test_invalid_code(self):
        report = self.use_case.execute(CodeJob("bad", invalid_candidate()))
        assert report.status == INVALID
        self.mock_fixture_repo.save.assert_not_called()


class TestReproduceTableUseCase:
    """Test suite for ReproduceTableUseCase"""

    def setup_method(self):
        self.mock_job_repo = Mock(spec=IJobRepository)
        self.use_case = ReproduceTableUseCase(self.mock_job_repo)
        self.rng = np.random.default_rng(73)

    def test_rows_matching_on_the_plain_path(self, random_code):
        # Arrange
        code = random_code(get_field(2, 2), 1, 2, 3, self.rng)
        matrix = code_gray_matrix(code)
        d = min_distance_bz(matrix).value
        jobs = [
            CodeJob("zero", zero_candidate(), expected=CodeParameters(8, 0)),
            CodeJob("random", code, expected=CodeParameters(10, matrix.rank, d)),
        ]
        self.mock_job_repo.load_manifest.return_value = jobs

        # Act
        report = self.use_case.execute("manifest.json")

        # Assert
        self.mock_job_repo.load_manifest.assert_called_once_with("manifest.json")
        assert [row.status for row in report.rows] == [PASS, PASS]
        assert report.rows[1].path == PATH_PLAIN
        assert report.status == PASS
        assert report.exit_code == 0

    def test_mismatches_are_reported_and_the_run_continues(self, random_code):
        code = random_code(get_field(2, 2), 1, 2, 2, self.rng)
        self.mock_job_repo.load_manifest.return_value = [
            CodeJob("bad", invalid_candidate(), expected=CodeParameters(8, 4)),
            CodeJob("wrong-k", code, expected=CodeParameters(8, code.expected_dimension + 1)),
            CodeJob("zero", zero_candidate(), expected=CodeParameters(8, 0)),
        ]

        report = self.use_case.execute("manifest.json")

        assert [row.status for row in report.rows] == [INVALID, CONTRADICTION, PASS]
        assert report.status == CONTRADICTION
        assert report.exit_code == 1

    def test_budgets_replace_row_budgets(self, random_code):
        code = random_code(get_field(2, 2), 1, 2, 2, self.rng)
        job = CodeJob("random", code, expected=CodeParameters(8, code.expected_dimension))
        self.mock_job_repo.load_manifest.return_value = [job]

        report = self.use_case.execute("manifest.json", Budgets(ops=1))

        assert report.rows[0].status in (PASS, BOUNDED)


class TestVerifyFixtureUseCase:
    """Test suite for VerifyFixtureUseCase"""

    def setup_method(self):
        self.mock_fixture_repo = Mock(spec=IMatrixFixtureRepository)
        self.use_case = VerifyFixtureUseCase(self.mock_fixture_repo)
        spec = get_field(3, 1)
        tokens = [["1", "0", "1", "1"], ["0", "1", "1", "2"]]
        self.matrix = LinearCodeMatrix.from_elements(
            spec, [[parse_element(x, spec) for x in row] for row in tokens], label="tetracode"
        )

    def test_matching_header(self):
        self.mock_fixture_repo.load.return_value = MatrixFixture("tetracode.txt", self.matrix, 2, 3)

        report = self.use_case.execute("tetracode.txt")

        self.mock_fixture_repo.load.assert_called_once_with("tetracode.txt")
        assert report.status == PASS
        assert (report.rank, report.distance.value) == (2, 3)

    def test_wrong_distance(self):
        self.mock_fixture_repo.load.return_value = MatrixFixture("tetracode.txt", self.matrix, 2, 4)
        report = self.use_case.execute("tetracode.txt")
        assert report.status == CONTRADICTION

    def test_wrong_rank(self):
        self.mock_fixture_repo.load.return_value = MatrixFixture("tetracode.txt", self.matrix, 3, 3)
        report = self.use_case.execute("tetracode.txt")
        assert report.status == CONTRADICTION
        assert "rank 2, expected 3" in report.message


class TestVerifyFactorizationsUseCase:
    """Test suite for VerifyFactorizationsUseCase"""

    def setup_method(self):
        self.mock_job_repo = Mock(spec=IJobRepository)
        self.use_case = VerifyFactorizationsUseCase(self.mock_job_repo)
        self.spec = get_field(2, 2)

    def case(self, label, n, left, right):
        return FactorizationCase(label, self.spec, 0, n, parse_poly(left, self.spec, 0), parse_poly(right, self.spec, 0))

    def test_correct_and_inconsistent_lines_pass(self):
        self.mock_job_repo.load_factorizations.return_value = [
            self.case("good", 3, "x^2 + x + 1", "x + 1"),
            self.case("short", 3, "x + 1", "x + 1"),
        ]

        report = self.use_case.execute("factorizations.json")

        assert [c.status for c in report.checks] == ["pass", "inconsistent"]
        assert report.status == PASS

    def test_wrong_line_is_a_contradiction(self):
        self.mock_job_repo.load_factorizations.return_value = [self.case("wrong", 3, "x^2 + 1", "x + 1")]
        report = self.use_case.execute("factorizations.json")
        assert report.checks[0].status == "fail"
        assert report.status == CONTRADICTION


class TestSearchCodesUseCase:
    """Test suite for SearchCodesUseCase"""

    def setup_method(self):
        self.spec = get_field(2, 2)
        self.bounds = DegreeBounds(1, 1, 1, 1)

    def test_empty_bounds(self):
        report = SearchCodesUseCase().execute(self.spec, 1, 2, 2, DegreeBounds(2, 1, 0, 2))
        assert report.status == PASS
        assert report.records == ()

    def test_records_stream_in_order(self):
        # Arrange
        seen = []

        # Act
        report = SearchCodesUseCase().execute(self.spec, 1, 2, 2, self.bounds, max_codes=6, on_record=seen.append)

        # Assert
        assert list(report.records) == seen
        assert report.records and report.records[0].best_so_far
        assert report.best is not None
        assert all(rec.n == 8 for rec in report.records)

    def test_same_seed_same_search(self):
        first = SearchCodesUseCase().execute(self.spec, 1, 2, 2, self.bounds, Budgets(seed=5), max_codes=6)
        second = SearchCodesUseCase().execute(self.spec, 1, 2, 2, self.bounds, Budgets(seed=5), max_codes=6)
        assert [r.to_dict() for r in first.records] == [r.to_dict() for r in second.records]

    def test_divisor_budget_refusal(self):
        report = SearchCodesUseCase(divisor_budget=1).execute(self.spec, 1, 2, 2, self.bounds)
        assert report.status == REFUSED
        assert report.exit_code == 3
