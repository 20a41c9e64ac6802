"""Infrastructure repositories module"""
from infrastructure.repositories.json_job_repository import JsonJobRepository
from infrastructure.repositories.matrix_fixture_repository import MatrixFixtureRepository
from infrastructure.repositories.report_writer import ReportWriter

__all__ = [
    'JsonJobRepository',
    'MatrixFixtureRepository',
    'ReportWriter'
]
