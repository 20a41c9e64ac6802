"""
Domain Layer - Matrix Fixture Repository Interface
"""
from abc import ABC, abstractmethod
from typing import Optional

from domain.entities import LinearCodeMatrix, MatrixFixture


class IMatrixFixtureRepository(ABC):
    """Interface for transcribed generator matrix files"""

    @abstractmethod
    def load(self, path: str) -> MatrixFixture:
        """
        Read a matrix fixture.

        Args:
            path: Fixture file path

        Returns:
            MatrixFixture with the header's expected rank and distance
        """
        pass

    @abstractmethod
    def save(self, path: str, matrix: LinearCodeMatrix,
             expected_rank: Optional[int] = None, expected_d: Optional[int] = None) -> str:
        """
        Write a matrix in fixture format.

        Returns:
            Path written
        """
        pass
