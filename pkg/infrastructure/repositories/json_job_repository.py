"""
Infrastructure Layer - JSON Job Repository

Implements IJobRepository on JSON documents validated by pydantic models.
"""
import json
import os
from typing import List, Optional, Type, TypeVar

from pydantic import BaseModel, ValidationError

from domain.entities import Budgets, CodeJob, CodeParameters, DoubleCodeSpec, FactorizationCase, GrayMatrix
from domain.entities.field import FieldSpec, get_field
from domain.entities.skew_poly import format_poly, parse_poly
from domain.errors import ParseError
from domain.interfaces import IJobRepository
from infrastructure.repositories.config_models import (
    ExpectedBlock,
    FactorizationsConfig,
    FieldBlock,
    GrayBlock,
    JobConfig,
    ManifestConfig,
)
from utils.logging_config import logger

ModelT = TypeVar("ModelT", bound=BaseModel)


class JsonJobRepository(IJobRepository):
    """
    JSON file-based job repository.

    Relative paths inside documents are not used; every document is
    self-contained.
    """

    def load_job(self, path: str) -> CodeJob:
        config = self._read(path, JobConfig)
        return self.job_from_config(config, path)

    def load_manifest(self, path: str) -> List[CodeJob]:
        manifest = self._read(path, ManifestConfig)
        jobs = [self.job_from_config(row, path) for row in manifest.rows]
        logger.info(f"Loaded manifest {path} with {len(jobs)} rows")
        return jobs

    def load_factorizations(self, path: str) -> List[FactorizationCase]:
        document = self._read(path, FactorizationsConfig)
        cases = []
        for item in document.factorizations:
            spec = self._field(item.field)
            cases.append(FactorizationCase(
                label=item.label,
                field=spec,
                i=item.i,
                n=item.n,
                left=parse_poly(item.left, spec, item.i),
                right=parse_poly(item.right, spec, item.i),
            ))
        return cases

    def dump_job(self, job: CodeJob) -> dict:
        code = job.candidate
        spec = code.field
        defaults = Budgets()
        config = JobConfig(
            label=job.label,
            field=FieldBlock(p=spec.p, m=spec.m, modulus=list(spec.modulus), label=spec.label),
            i=code.i,
            r=code.r,
            s=code.s,
            g_v=format_poly(code.g_v),
            g_vp=format_poly(code.g_vp),
            l_v=format_poly(code.l_v),
            l_vp=format_poly(code.l_vp),
            h_v=format_poly(code.h_v),
            h_vp=format_poly(code.h_vp),
            gray=GrayBlock(entries=job.gray.to_text()) if job.gray is not None else None,
            budget_ops=job.budgets.ops if job.budgets.ops != defaults.ops else None,
            budget_secs=job.budgets.secs if job.budgets.secs != defaults.secs else None,
            seed=job.budgets.seed if job.budgets.seed != defaults.seed else None,
            expected=ExpectedBlock(**job.expected.to_dict()) if job.expected else None,
            reference=str(job.reference) if job.reference else None,
        )
        return config.model_dump(exclude_none=True)

    # -- conversion -------------------------------------------------------

    def job_from_config(self, config: JobConfig, source: str = "") -> CodeJob:
        """Entity from a validated config; polynomial and element text is parsed here"""
        spec = self._field(config.field)
        i = config.i

        def poly(text: str):
            return parse_poly(text, spec, i)

        try:
            candidate = DoubleCodeSpec(
                spec, i, config.r, config.s,
                poly(config.g_v), poly(config.g_vp),
                poly(config.l_v), poly(config.l_vp),
                poly(config.h_v), poly(config.h_vp),
                config.label,
            )
            gray = GrayMatrix.parse(config.gray.entries, spec) if config.gray else None
            budgets = Budgets().override(ops=config.budget_ops, secs=config.budget_secs, seed=config.seed)
            expected = CodeParameters(**config.expected.model_dump()) if config.expected else None
            reference = CodeParameters.parse(config.reference) if config.reference else None
            return CodeJob(config.label, candidate, gray, budgets, expected, reference, source)
        except ParseError:
            raise
        except ValueError as e:
            raise ParseError(f"{source or 'config'}: job {config.label!r}: {e}") from e

    @staticmethod
    def _field(block: FieldBlock) -> FieldSpec:
        return get_field(block.p, block.m, block.modulus, block.label)

    @staticmethod
    def _read(path: str, model: Type[ModelT]) -> ModelT:
        if not os.path.exists(path):
            raise ParseError(f"config file not found: {path}")
        try:
            with open(path, "r") as f:
                data = json.load(f)
        except json.JSONDecodeError as e:
            logger.error(f"Failed to parse JSON from {path}: {e}")
            raise ParseError(f"{path}: invalid JSON: {e}") from e
        try:
            return model.model_validate(data)
        except ValidationError as e:
            raise ParseError(f"{path}: {e}") from e

    @staticmethod
    def parse_document(data: dict, source: Optional[str] = None) -> JobConfig:
        """Validate an in-memory job document"""
        try:
            return JobConfig.model_validate(data)
        except ValidationError as e:
            raise ParseError(f"{source or 'config'}: {e}") from e
