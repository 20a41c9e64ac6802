"""
Application Layer - Reproduce Table Use Case

Runs every manifest row: the plain Gray image first, then the block
construction when the plain code cannot reach the tabulated distance.
"""
from typing import List, Optional

from domain.entities import Budgets, CodeJob, CodeParameters, TableReport, TableRowReport
from domain.entities.reports import BOUNDED, CONTRADICTION, ERROR, INVALID, PASS
from domain.errors import DoubleSkewError
from domain.interfaces import IJobRepository
from domain.services.construction import build_construction, construction_input
from domain.services.double_code_ops import code_gray_matrix, validate
from application.use_cases.common import compute_distance, distance_status, improves, resolve_gray
from utils.logging_config import log_error, logger

PATH_PLAIN = "plain"
PATH_CONSTRUCTION = "construction"


class ReproduceTableUseCase:
    """
    Use case for a table manifest.

    Handles business rules:
    - n and k must match exactly, on whichever path is reported
    - A distance bound that still admits the tabulated value is "bounded"
    - A row that fails to evaluate is reported and the run continues
    """

    def __init__(self, job_repo: IJobRepository):
        self._job_repo = job_repo

    def execute(self, manifest_path: str, budgets: Optional[Budgets] = None) -> TableReport:
        """
        Reproduce a manifest.

        Args:
            manifest_path: Manifest document
            budgets: Replaces every row's budgets when given

        Returns:
            TableReport with one row per manifest entry
        """
        jobs = self._job_repo.load_manifest(manifest_path)
        rows: List[TableRowReport] = []
        for index, job in enumerate(jobs, start=1):
            if budgets is not None:
                job = job.with_budgets(budgets)
            logger.info(f"table row {index}/{len(jobs)}: {job.label}", extra={"code_label": job.label})
            rows.append(self._run_row(job))
        return TableReport(tuple(rows), manifest_path)

    def _run_row(self, job: CodeJob) -> TableRowReport:
        expected = job.expected or CodeParameters(job.candidate.gray_length, job.candidate.expected_dimension)
        validation = validate(job.candidate)
        if not validation.is_valid:
            return TableRowReport(job.label, INVALID, expected,
                                  message="; ".join(str(v) for v in validation.violations))
        code = validation.code
        try:
            gray = resolve_gray(job)
            plain = code_gray_matrix(code, gray)
            if (plain.n, plain.rank) != (expected.n, expected.k):
                return TableRowReport(job.label, CONTRADICTION, expected, plain.n, plain.rank,
                                      path=PATH_PLAIN,
                                      message=f"[{plain.n}, {plain.rank}] computed")
            d_plain = compute_distance(plain, job.budgets)
            status, message = distance_status(d_plain, expected.d)
            if status != CONTRADICTION:
                return self._row(job, status, expected, plain.n, plain.rank, d_plain, PATH_PLAIN, message)

            # the plain image misses the tabulated distance; try G'
            after = build_construction(construction_input(code, gray), code.r, code.s, f"{job.label} G'")
            if (after.n, after.rank) != (expected.n, expected.k):
                return self._row(job, CONTRADICTION, expected, plain.n, plain.rank, d_plain, PATH_PLAIN,
                                 f"{message}; G' is [{after.n}, {after.rank}]")
            d_after = compute_distance(after, job.budgets)
            status, after_message = distance_status(d_after, expected.d)
            if status == CONTRADICTION:
                return self._row(job, CONTRADICTION, expected, plain.n, plain.rank, d_plain, PATH_PLAIN,
                                 f"plain: {message}; construction: {after_message}")
            return self._row(job, status, expected, after.n, after.rank, d_after, PATH_CONSTRUCTION,
                             after_message)
        except DoubleSkewError as e:
            log_error(f"table row {job.label} failed", e, code_label=job.label)
            return TableRowReport(job.label, ERROR, expected, message=str(e))

    @staticmethod
    def _row(job: CodeJob, status: str, expected: CodeParameters, n: int, k: int,
             distance, path: str, message: str) -> TableRowReport:
        level = logger.info if status in (PASS, BOUNDED) else logger.warning
        level(f"{job.label}: [{n}, {k}, {distance.describe()}] via {path}: {status}",
              extra={"code_label": job.label})
        return TableRowReport(
            label=job.label,
            status=status,
            expected=expected,
            n=n,
            k=k,
            distance=distance,
            path=path,
            reference=job.reference,
            improves_on_reference=improves(job.reference, n, k, distance),
            message=message,
        )
