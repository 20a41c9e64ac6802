"""Domain interfaces module"""
from domain.interfaces.i_job_repository import IJobRepository
from domain.interfaces.i_matrix_fixture_repository import IMatrixFixtureRepository
from domain.interfaces.i_report_writer import FORMATS, IReportWriter

__all__ = [
    'IJobRepository',
    'IMatrixFixtureRepository',
    'IReportWriter',
    'FORMATS'
]
