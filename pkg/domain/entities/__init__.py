"""Domain entities module"""
from domain.entities.field import FieldElement, FieldSpec, get_field
from domain.entities.ring import RingElement
from domain.entities.skew_poly import SkewPoly
from domain.entities.gray import GrayMatrix, default_n
from domain.entities.linear_code import DistanceResult, LinearCodeMatrix, StandardForm
from domain.entities.double_code import (
    Cardinality,
    DoubleCodeSpec,
    DoubleWord,
    DualData,
    RingMatrix,
    ValidationReport,
    Violation,
)
from domain.entities.reports import (
    Check,
    CodeParameters,
    ConstructionReport,
    DualReport,
    FactorizationCheck,
    FactorizationReport,
    FixtureReport,
    ParametersReport,
    SearchRecord,
    SearchReport,
    TableReport,
    TableRowReport,
)
from domain.entities.job import Budgets, CodeJob, FactorizationCase, MatrixFixture

__all__ = [
    'FieldElement',
    'FieldSpec',
    'get_field',
    'RingElement',
    'SkewPoly',
    'GrayMatrix',
    'default_n',
    'DistanceResult',
    'LinearCodeMatrix',
    'StandardForm',
    'Cardinality',
    'DoubleCodeSpec',
    'DoubleWord',
    'DualData',
    'RingMatrix',
    'ValidationReport',
    'Violation',
    'Check',
    'CodeParameters',
    'ConstructionReport',
    'DualReport',
    'FactorizationCheck',
    'FactorizationReport',
    'FixtureReport',
    'ParametersReport',
    'SearchRecord',
    'SearchReport',
    'TableReport',
    'TableRowReport',
    'Budgets',
    'CodeJob',
    'FactorizationCase',
    'MatrixFixture',
]
