"""
Domain Layer - Job Repository Interface

Abstract interface for loading job configs, table manifests and
factorization lists.
"""
from abc import ABC, abstractmethod
from typing import List

from domain.entities import CodeJob, FactorizationCase


class IJobRepository(ABC):
    """
    Interface for job document storage.

    Implementations parse a text format into validated entities and raise
    ParseError on malformed or unknown input.
    """

    @abstractmethod
    def load_job(self, path: str) -> CodeJob:
        """
        Load one job config.

        Args:
            path: Config document path

        Returns:
            CodeJob with an unvalidated candidate code
        """
        pass

    @abstractmethod
    def load_manifest(self, path: str) -> List[CodeJob]:
        """
        Load a table manifest.

        Args:
            path: Manifest document path

        Returns:
            Jobs in manifest order, each carrying its expected parameters
        """
        pass

    @abstractmethod
    def load_factorizations(self, path: str) -> List[FactorizationCase]:
        """Load displayed factorizations"""
        pass

    @abstractmethod
    def dump_job(self, job: CodeJob) -> dict:
        """Canonical document for a job; load_job re-reads it unchanged"""
        pass
