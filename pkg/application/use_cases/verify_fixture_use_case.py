"""
Application Layer - Verify Fixture Use Case
"""
from typing import Optional

from domain.entities import Budgets, FixtureReport
from domain.entities.reports import CONTRADICTION
from domain.interfaces import IMatrixFixtureRepository
from application.use_cases.common import compute_distance, distance_status, witness_check
from utils.logging_config import logger


class VerifyFixtureUseCase:
    """Rank and distance of a transcribed matrix against its header"""

    def __init__(self, fixture_repo: IMatrixFixtureRepository):
        self._fixture_repo = fixture_repo

    def execute(self, path: str, budgets: Optional[Budgets] = None) -> FixtureReport:
        """
        Verify one fixture.

        Args:
            path: Fixture file
            budgets: Distance budgets (defaults when None)

        Returns:
            FixtureReport
        """
        budgets = budgets or Budgets()
        fixture = self._fixture_repo.load(path)
        matrix = fixture.matrix
        distance = compute_distance(matrix, budgets)
        status, message = distance_status(distance, fixture.expected_d)

        if fixture.expected_rank is not None and matrix.rank != fixture.expected_rank:
            status = CONTRADICTION
            message = "; ".join(filter(None, [f"rank {matrix.rank}, expected {fixture.expected_rank}", message]))
        witness = witness_check(matrix, distance)
        if not witness.passed:
            status = CONTRADICTION
            message = "; ".join(filter(None, [message, str(witness)]))

        logger.info(f"fixture {path}: rank {matrix.rank}, d {distance.describe()}: {status}")
        return FixtureReport(
            path=path,
            status=status,
            field=matrix.field.name,
            rows=matrix.rows,
            cols=matrix.n,
            rank=matrix.rank,
            expected_rank=fixture.expected_rank,
            distance=distance,
            expected_d=fixture.expected_d,
            message=message,
        )
