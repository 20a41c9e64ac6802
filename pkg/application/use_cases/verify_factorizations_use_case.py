"""
Application Layer - Verify Factorizations Use Case
"""
from domain.entities import FactorizationCase, FactorizationCheck, FactorizationReport
from domain.entities.skew_poly import format_poly
from domain.interfaces import IJobRepository
from domain.services.divisor_search import verify_factorization
from utils.logging_config import logger

STATUS_OK = "pass"
STATUS_FAIL = "fail"
STATUS_INCONSISTENT = "inconsistent"


class VerifyFactorizationsUseCase:
    """
    Use case for displayed factorizations of x^n - 1.

    A line whose factor degrees do not add up to n is "inconsistent"; its
    right factor is still tested as a right divisor of x^n - 1.
    """

    def __init__(self, job_repo: IJobRepository):
        self._job_repo = job_repo

    def execute(self, path: str) -> FactorizationReport:
        cases = self._job_repo.load_factorizations(path)
        return FactorizationReport(tuple(self.check(case) for case in cases), path)

    @staticmethod
    def check(case: FactorizationCase) -> FactorizationCheck:
        outcome = verify_factorization(case.n, case.left, case.right)
        if not outcome.degree_consistent:
            status = STATUS_INCONSISTENT
            detail = (
                f"deg left + deg right = {case.left.degree + case.right.degree}, not {case.n}; "
                f"right factor {'does' if outcome.right_divides else 'does not'} right-divide x^{case.n}-1"
            )
        elif outcome.product_matches and outcome.right_divides and outcome.quotient_matches:
            status, detail = STATUS_OK, ""
        else:
            status = STATUS_FAIL
            detail = (f"product matches: {outcome.product_matches}, "
                      f"right divides: {outcome.right_divides}, quotient matches: {outcome.quotient_matches}")
        logger.info(f"factorization {case.label}: {status}")
        return FactorizationCheck(
            label=case.label,
            status=status,
            field=case.field.name,
            n=case.n,
            left=format_poly(case.left),
            right=format_poly(case.right),
            product_matches=outcome.product_matches,
            right_divides=outcome.right_divides,
            quotient_matches=outcome.quotient_matches,
            detail=detail,
        )
