"""
Application Layer - Run Construction Use Case

Builds G' for a job and compares its parameters with the plain Gray image.
"""
from typing import Optional

from domain.entities import CodeJob, ConstructionReport
from domain.entities.reports import CONTRADICTION, ERROR, INVALID, worst_status
from domain.errors import DoubleSkewError, InvalidGrayMatrixError
from domain.interfaces import IMatrixFixtureRepository
from domain.services.construction import evaluate_construction
from domain.services.double_code_ops import validate
from application.use_cases.common import (
    distance_status,
    failed_binding,
    improves,
    resolve_gray,
    witness_check,
)
from utils.logging_config import log_error


class RunConstructionUseCase:
    """Use case for the block construction of one code"""

    def __init__(self, fixture_repo: IMatrixFixtureRepository):
        self._fixture_repo = fixture_repo

    def execute(self, job: CodeJob, matrix_out: Optional[str] = None) -> ConstructionReport:
        """
        Evaluate the construction.

        Args:
            job: Parsed job; its reference, if any, is compared with G'
            matrix_out: Optional fixture path for G'

        Returns:
            ConstructionReport
        """
        field = job.field.name
        validation = validate(job.candidate)
        if not validation.is_valid:
            return ConstructionReport(
                job.label, INVALID, field,
                violations=tuple(v.to_dict() for v in validation.violations),
                message="generator conditions violated",
            )
        code = validation.code
        try:
            gray = resolve_gray(job)
            budgets = job.budgets
            result = evaluate_construction(code, gray, budgets.distance_ops, budgets.distance_secs,
                                           budgets.workers)
        except InvalidGrayMatrixError as e:
            return ConstructionReport(job.label, INVALID, field, message=str(e))
        except DoubleSkewError as e:
            log_error(f"{job.label}: construction failed", e, code_label=job.label)
            return ConstructionReport(job.label, ERROR, field, message=str(e))

        checks = list(result.checks) + [
            witness_check(result.before, result.d_before),
            witness_check(result.after, result.d_after),
        ]
        status = worst_status([distance_status(result.d_before, None)[0],
                               distance_status(result.d_after, None)[0]])
        failed = failed_binding(checks)
        if failed:
            status = CONTRADICTION

        n, k_after = result.after.n, result.after.rank
        matrix_path = None
        if matrix_out:
            matrix_path = self._fixture_repo.save(matrix_out, result.after, k_after, result.d_after.value)

        return ConstructionReport(
            label=job.label,
            status=status,
            field=field,
            case=result.case,
            n=n,
            rows=result.after.rows,
            k_before=result.before.rank,
            k_after=k_after,
            d_before=result.d_before,
            d_after=result.d_after,
            checks=tuple(checks),
            reference=job.reference,
            improves_on_reference=improves(job.reference, n, k_after, result.d_after),
            matrix_path=matrix_path,
            message="; ".join(f"{c.name} failed" for c in failed),
        )
