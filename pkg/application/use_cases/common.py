"""
Application Layer - Shared Use Case Helpers

Status folding and the distance bookkeeping every command repeats.
"""
from typing import Iterable, List, Optional, Tuple

import numpy as np

from domain.entities import (
    Budgets,
    Check,
    CodeJob,
    CodeParameters,
    DistanceResult,
    GrayMatrix,
    LinearCodeMatrix,
    default_n,
)
from domain.entities.reports import BOUNDED, CONTRADICTION, PASS
from domain.services.distance import min_distance_bz


def compute_distance(matrix: LinearCodeMatrix, budgets: Budgets) -> DistanceResult:
    return min_distance_bz(matrix, budgets.distance_ops, budgets.distance_secs, budgets.workers)


def witness_check(matrix: LinearCodeMatrix, result: DistanceResult) -> Check:
    """The witness is a codeword of weight upper"""
    if result.upper is None or result.witness is None:
        return Check("distance witness", True, "no nonzero codeword")
    word = np.array(result.witness, dtype=np.int32)
    weight = int(np.count_nonzero(word))
    ok = weight == result.upper and matrix.contains(word)
    return Check("distance witness", ok, f"weight {weight}, upper {result.upper}")


def failed_binding(checks: Iterable[Check]) -> List[Check]:
    return [c for c in checks if c.binding and not c.passed]


def distance_status(result: Optional[DistanceResult], expected_d: Optional[int]) -> Tuple[str, str]:
    """
    Compare a distance result with an expected value.

    Returns:
        (status, message); exact mismatches and bounds excluding the
        expected value are contradictions
    """
    if result is None or result.upper is None:
        if expected_d is None:
            return PASS, ""
        return CONTRADICTION, f"no nonzero codeword, expected d = {expected_d}"
    if expected_d is None:
        return (PASS, "") if result.exact else (BOUNDED, f"d in [{result.lower}, {result.upper}]")
    if result.exact:
        if result.upper == expected_d:
            return PASS, ""
        return CONTRADICTION, f"d = {result.upper}, expected {expected_d}"
    if result.consistent_with(expected_d):
        return BOUNDED, f"d in [{result.lower}, {result.upper}], expected {expected_d}"
    return CONTRADICTION, f"d in [{result.lower}, {result.upper}] excludes expected {expected_d}"


def parameters_status(n: int, k: int, result: Optional[DistanceResult],
                      expected: Optional[CodeParameters]) -> Tuple[str, str]:
    if expected is not None and (expected.n != n or expected.k != k):
        return CONTRADICTION, f"[{n}, {k}] computed, expected [{expected.n}, {expected.k}]"
    return distance_status(result, expected.d if expected else None)


def improves(reference: Optional[CodeParameters], n: int, k: int,
             result: Optional[DistanceResult]) -> Optional[bool]:
    if reference is None:
        return None
    return reference.improved_by(n, k, result.value if result is not None else None)


def standard_form_tokens(matrix: LinearCodeMatrix, max_cols: int = 40) -> Optional[List[List[str]]]:
    """[I | A] as element tokens for small matrices"""
    if matrix.rank == 0 or matrix.n > max_cols:
        return None
    form = matrix.standard_form
    return LinearCodeMatrix(matrix.field, form.matrix).to_tokens()


def resolve_gray(job: CodeJob) -> GrayMatrix:
    """Job override or the field's default N"""
    return job.gray if job.gray is not None else default_n(job.field)
