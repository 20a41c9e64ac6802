"""
Application Layer - Compute Parameters Use Case

Validates a job's code, builds its Gray image and reports [n, k, d]
together with the structural checks.
"""
from typing import Optional

from domain.entities import Check, CodeJob, ParametersReport
from domain.entities.reports import CONTRADICTION, ERROR, INVALID
from domain.errors import DoubleSkewError, InvalidGrayMatrixError
from domain.interfaces import IMatrixFixtureRepository
from domain.services.double_code_ops import (
    cardinality,
    code_gray_matrix,
    divisibility_corollaries,
    generator_matrix_R,
    module_condition_checks,
    shift_closure_check,
    structure_degrees,
    validate,
)
from domain.services.dual import cardinality_exponents
from domain.services.gray_map import phi_matrix
from application.use_cases.common import (
    compute_distance,
    failed_binding,
    improves,
    parameters_status,
    resolve_gray,
    standard_form_tokens,
    witness_check,
)
from utils.logging_config import log_error, logger


class ComputeParametersUseCase:
    """
    Use case for the parameters of one double skew cyclic code.

    Handles business rules:
    - Invalid generator data is reported with every violated condition
    - Distance comes back exact or as bounds, never as a failure
    - Binding check failures and expectation mismatches are contradictions
    """

    def __init__(self, fixture_repo: IMatrixFixtureRepository):
        self._fixture_repo = fixture_repo

    def execute(self, job: CodeJob, matrix_out: Optional[str] = None) -> ParametersReport:
        """
        Compute [n, k, d] for a job.

        Args:
            job: Parsed job
            matrix_out: Optional fixture path for the Gray generator matrix

        Returns:
            ParametersReport
        """
        field = job.field.name
        validation = validate(job.candidate)
        if not validation.is_valid:
            logger.warning(f"{job.label}: invalid code", extra={"code_label": job.label})
            return ParametersReport(
                job.label, INVALID, field,
                code=job.candidate.to_dict(),
                violations=tuple(v.to_dict() for v in validation.violations),
                expected=job.expected,
                message="generator conditions violated",
            )
        code = validation.code
        try:
            gray = resolve_gray(job)
        except InvalidGrayMatrixError as e:
            return ParametersReport(job.label, INVALID, field, code=code.to_dict(), message=str(e))

        try:
            matrix = code_gray_matrix(code, gray)
            distance = compute_distance(matrix, job.budgets)
            module = module_condition_checks(code)
            closed = all(c.passed for c in module)
            over_r = phi_matrix(generator_matrix_R(code).rows, gray, code.n)
            checks = [
                Check("k = expected dimension", matrix.rank == code.expected_dimension,
                      f"{matrix.rank} vs {code.expected_dimension}"),
                Check("spanning set is a basis", matrix.rank == matrix.rows,
                      f"rank {matrix.rank} of {matrix.rows} rows"),
                Check("Gray image of the matrix over R has full rank", over_r.rank == matrix.rows,
                      f"rank {over_r.rank} of {matrix.rows} rows"),
                shift_closure_check(code, gray, matrix, binding=closed),
                witness_check(matrix, distance),
                *module,
            ]
            checks.extend(divisibility_corollaries(code, module=closed))
        except DoubleSkewError as e:
            log_error(f"{job.label}: parameter computation failed", e, code_label=job.label)
            return ParametersReport(job.label, ERROR, field, code=code.to_dict(), message=str(e))

        n, k = matrix.n, matrix.rank
        status, message = parameters_status(n, k, distance, job.expected)
        failed = failed_binding(checks)
        if failed:
            status = CONTRADICTION
            message = "; ".join(filter(None, [message] + [f"{c.name} failed" for c in failed]))

        matrix_path = None
        if matrix_out:
            matrix_path = self._fixture_repo.save(matrix_out, matrix, k, distance.value)

        logger.info(
            f"{job.label}: [{n}, {k}, {distance.describe()}] {status}",
            extra={"code_label": job.label},
        )
        card = cardinality(code)
        return ParametersReport(
            label=job.label,
            status=status,
            field=field,
            code=code.to_dict(),
            n=n,
            k=k,
            expected_dimension=code.expected_dimension,
            distance=distance,
            cardinality={
                "total": card.total_exp,
                "left": card.left_exp,
                "right": card.right_exp,
                **cardinality_exponents(code),
            },
            structure_degrees=structure_degrees(code),
            checks=tuple(checks),
            expected=job.expected,
            reference=job.reference,
            improves_on_reference=improves(job.reference, n, k, distance),
            standard_form=standard_form_tokens(matrix),
            matrix_path=matrix_path,
            message=message,
        )
