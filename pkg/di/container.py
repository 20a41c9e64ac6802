"""
Dependency Injection Container

Wires all dependencies together following Clean Architecture.
This is the composition root of the application.
"""
from typing import Optional

from infrastructure.repositories import (
    JsonJobRepository,
    MatrixFixtureRepository,
    ReportWriter
)
from application.use_cases import (
    ComputeParametersUseCase,
    ComputeDualUseCase,
    RunConstructionUseCase,
    ReproduceTableUseCase,
    VerifyFixtureUseCase,
    SearchCodesUseCase,
    VerifyFactorizationsUseCase
)


class DIContainer:
    """
    Dependency Injection Container.

    1. Instantiates infrastructure implementations
    2. Injects them into use cases
    3. Provides a clean API for the command line
    """

    def __init__(self):
        """Initialize all dependencies"""
        # Infrastructure Layer (Outer)
        self._init_infrastructure()

        # Application Layer (Middle)
        self._init_application()

    def _init_infrastructure(self):
        """Initialize infrastructure implementations"""
        self.job_repo = JsonJobRepository()
        self.fixture_repo = MatrixFixtureRepository()
        self.report_writer = ReportWriter()

    def _init_application(self):
        """Initialize application use cases with injected dependencies"""
        self.compute_parameters = ComputeParametersUseCase(fixture_repo=self.fixture_repo)
        self.compute_dual = ComputeDualUseCase(fixture_repo=self.fixture_repo)
        self.run_construction = RunConstructionUseCase(fixture_repo=self.fixture_repo)
        self.reproduce_table = ReproduceTableUseCase(job_repo=self.job_repo)
        self.verify_fixture = VerifyFixtureUseCase(fixture_repo=self.fixture_repo)
        self.search_codes = SearchCodesUseCase()
        self.verify_factorizations = VerifyFactorizationsUseCase(job_repo=self.job_repo)


# Global singleton instance
_container: Optional[DIContainer] = None


def get_container() -> DIContainer:
    """
    Get or create the global DI container.

    Returns:
        DIContainer instance
    """
    global _container
    if _container is None:
        _container = DIContainer()
    return _container


def reset_container():
    """Reset the container (useful for testing)"""
    global _container
    _container = None
