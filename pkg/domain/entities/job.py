"""
Domain Layer - Job Entities

A parsed job: the candidate code, optional Gray matrix override, budgets
and the parameters it is expected to reach. Also the matrix fixtures and
displayed factorizations shipped as data.
"""
from dataclasses import dataclass, replace
from typing import Optional

from domain.entities.double_code import DoubleCodeSpec
from domain.entities.field import FieldSpec
from domain.entities.gray import GrayMatrix
from domain.entities.linear_code import LinearCodeMatrix
from domain.entities.reports import CodeParameters
from domain.entities.skew_poly import SkewPoly
from utils.config import (
    DEFAULT_SEED,
    DISTANCE_BUDGET_OPS,
    DISTANCE_BUDGET_SECS,
    EXHAUSTIVE_BUDGET,
    LONG_RUN_BUDGET_OPS,
    LONG_RUN_BUDGET_SECS,
    MAX_WORKERS,
)


@dataclass(frozen=True)
class Budgets:
    """Work limits shared by every command"""
    ops: int = DISTANCE_BUDGET_OPS
    secs: float = DISTANCE_BUDGET_SECS
    long_run: bool = False
    workers: int = MAX_WORKERS
    seed: int = DEFAULT_SEED
    exhaustive: int = EXHAUSTIVE_BUDGET

    def __post_init__(self):
        if self.ops < 1:
            raise ValueError(f"operation budget must be positive, got {self.ops}")
        if self.secs <= 0:
            raise ValueError(f"time budget must be positive, got {self.secs}")
        if self.workers < 1:
            raise ValueError(f"worker count must be positive, got {self.workers}")

    @property
    def distance_ops(self) -> int:
        return max(self.ops, LONG_RUN_BUDGET_OPS) if self.long_run else self.ops

    @property
    def distance_secs(self) -> float:
        return max(self.secs, LONG_RUN_BUDGET_SECS) if self.long_run else self.secs

    def override(self, ops: Optional[int] = None, secs: Optional[float] = None,
                 long_run: Optional[bool] = None, seed: Optional[int] = None) -> "Budgets":
        """Command-line values win over job-file values"""
        return replace(
            self,
            ops=self.ops if ops is None else ops,
            secs=self.secs if secs is None else secs,
            long_run=self.long_run if long_run is None else long_run,
            seed=self.seed if seed is None else seed,
        )


@dataclass(frozen=True)
class CodeJob:
    """One code to evaluate; candidate is not validated yet"""
    label: str
    candidate: DoubleCodeSpec
    gray: Optional[GrayMatrix] = None
    budgets: Budgets = Budgets()
    expected: Optional[CodeParameters] = None
    reference: Optional[CodeParameters] = None
    source: str = ""

    def __post_init__(self):
        if not self.label:
            raise ValueError("Job label cannot be empty")
        if self.gray is not None and self.gray.field != self.candidate.field:
            raise ValueError(
                f"Gray matrix is over {self.gray.field.name}, code over {self.candidate.field.name}"
            )

    @property
    def field(self) -> FieldSpec:
        return self.candidate.field

    def with_budgets(self, budgets: Budgets) -> "CodeJob":
        return replace(self, budgets=budgets)


@dataclass(frozen=True)
class MatrixFixture:
    """Transcribed generator matrix with the values its header claims"""
    path: str
    matrix: LinearCodeMatrix
    expected_rank: Optional[int] = None
    expected_d: Optional[int] = None


@dataclass(frozen=True)
class FactorizationCase:
    """A displayed factorization x^n - 1 = left * right"""
    label: str
    field: FieldSpec
    i: int
    n: int
    left: SkewPoly
    right: SkewPoly

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"x^n - 1 needs n >= 1, got {self.n}")
