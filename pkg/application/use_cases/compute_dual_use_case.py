"""
Application Layer - Compute Dual Use Case
"""
from typing import Optional

from domain.entities import CodeJob, DualReport
from domain.entities.reports import CONTRADICTION, ERROR, INVALID, PASS
from domain.errors import DoubleSkewError, InvalidGrayMatrixError
from domain.interfaces import IMatrixFixtureRepository
from domain.services.double_code_ops import code_gray_matrix, module_condition_checks, validate
from domain.services.dual import (
    cardinality_exponents,
    closed_forms,
    dual_checks,
    dual_generators,
    nullspace_dual,
    parity_checks,
)
from application.use_cases.common import failed_binding, resolve_gray
from utils.logging_config import log_error, logger

NOT_CLOSED = "code is not T-shift closed; its dual is not double skew cyclic, only the parity basis is reported"


class ComputeDualUseCase:
    """
    Use case for the dual of a double skew cyclic code.

    The dual generators come from the nullspace of the Gray image; the
    closed forms are evaluated alongside and compared with them. A code
    failing the module condition gets its parity basis only.
    """

    def __init__(self, fixture_repo: IMatrixFixtureRepository):
        self._fixture_repo = fixture_repo

    def execute(self, job: CodeJob, matrix_out: Optional[str] = None) -> DualReport:
        """
        Compute the dual generators and run the duality checks.

        Args:
            job: Parsed job
            matrix_out: Optional fixture path for the parity matrix

        Returns:
            DualReport
        """
        field = job.field.name
        validation = validate(job.candidate)
        if not validation.is_valid:
            return DualReport(
                job.label, INVALID, field,
                violations=tuple(v.to_dict() for v in validation.violations),
                message="generator conditions violated",
            )
        code = validation.code
        try:
            gray = resolve_gray(job)
        except InvalidGrayMatrixError as e:
            return DualReport(job.label, INVALID, field, message=str(e))

        generators = closed = None
        try:
            matrix = code_gray_matrix(code, gray)
            module = module_condition_checks(code)
            if all(c.passed for c in module):
                dual = dual_generators(code, gray)
                parity = dual.parity
                checks = dual_checks(code, dual, gray)
                generators, closed = dual.to_dict(), closed_forms(code)
            else:
                parity = nullspace_dual(code, gray)
                checks = parity_checks(code, matrix, parity) + module
        except DoubleSkewError as e:
            log_error(f"{job.label}: dual computation failed", e, code_label=job.label)
            return DualReport(job.label, ERROR, field, message=str(e))

        failed = failed_binding(checks)
        status = CONTRADICTION if failed else PASS
        message = "; ".join(f"{c.name} failed" for c in failed)
        if generators is None:
            message = "; ".join(filter(None, [NOT_CLOSED, message]))

        matrix_path = None
        if matrix_out:
            matrix_path = self._fixture_repo.save(matrix_out, parity, parity.rows)

        logger.info(
            f"{job.label}: dual [{code.gray_length}, {parity.rows}] {status}",
            extra={"code_label": job.label},
        )
        return DualReport(
            label=job.label,
            status=status,
            field=field,
            n=code.gray_length,
            k=matrix.rank,
            dual_k=parity.rows,
            generators=generators,
            closed_form=closed,
            cardinality=cardinality_exponents(code),
            checks=tuple(checks),
            matrix_path=matrix_path,
            message=message,
        )
