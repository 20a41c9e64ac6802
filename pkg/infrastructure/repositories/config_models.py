"""
Infrastructure Layer - Config Document Models

Pydantic models for job configs, table manifests and factorization lists.
Unknown keys are rejected everywhere.
"""
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field


class StrictModel(BaseModel):
    model_config = ConfigDict(extra="forbid")


class FieldBlock(StrictModel):
    p: int
    m: int = 1
    modulus: Optional[List[int]] = None
    label: str = ""


class GrayBlock(StrictModel):
    entries: List[List[str]]


class ExpectedBlock(StrictModel):
    n: int
    k: int
    d: Optional[int] = None


class JobConfig(StrictModel):
    label: str
    field: FieldBlock
    i: int = 1
    r: int = Field(ge=1)
    s: int = Field(ge=1)
    g_v: str
    g_vp: str
    l_v: str = "0"
    l_vp: str = "0"
    h_v: str
    h_vp: str
    gray: Optional[GrayBlock] = None
    budget_ops: Optional[int] = Field(default=None, ge=1)
    budget_secs: Optional[float] = Field(default=None, gt=0)
    seed: Optional[int] = None
    expected: Optional[ExpectedBlock] = None
    reference: Optional[str] = None


class ManifestConfig(StrictModel):
    source: str = ""
    description: str = ""
    rows: List[JobConfig]


class FactorizationConfig(StrictModel):
    label: str
    field: FieldBlock
    i: int = 1
    n: int = Field(ge=1)
    left: str
    right: str


class FactorizationsConfig(StrictModel):
    source: str = ""
    factorizations: List[FactorizationConfig]
