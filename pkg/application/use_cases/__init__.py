"""Application use cases module"""
from application.use_cases.compute_parameters_use_case import ComputeParametersUseCase
from application.use_cases.compute_dual_use_case import ComputeDualUseCase
from application.use_cases.run_construction_use_case import RunConstructionUseCase
from application.use_cases.reproduce_table_use_case import ReproduceTableUseCase
from application.use_cases.verify_fixture_use_case import VerifyFixtureUseCase
from application.use_cases.search_codes_use_case import DegreeBounds, SearchCodesUseCase
from application.use_cases.verify_factorizations_use_case import VerifyFactorizationsUseCase

__all__ = [
    'ComputeParametersUseCase',
    'ComputeDualUseCase',
    'RunConstructionUseCase',
    'ReproduceTableUseCase',
    'VerifyFixtureUseCase',
    'SearchCodesUseCase',
    'DegreeBounds',
    'VerifyFactorizationsUseCase'
]
