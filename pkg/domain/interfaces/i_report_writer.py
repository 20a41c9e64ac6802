"""
Domain Layer - Report Writer Interface
"""
from abc import ABC, abstractmethod
from typing import Optional

from domain.entities.reports import Report

FORMATS = ("text", "json", "csv")


class IReportWriter(ABC):
    """Interface for rendering reports"""

    @abstractmethod
    def render(self, report: Report, fmt: str) -> str:
        """Report as text in one of FORMATS"""
        pass

    @abstractmethod
    def write(self, report: Report, fmt: str, out: Optional[str] = None) -> Optional[str]:
        """
        Render and emit a report.

        Args:
            report: Any use case report
            fmt: One of FORMATS
            out: Destination file; stdout when None

        Returns:
            Path written, or None for stdout
        """
        pass
