"""
Domain Service - Divisor Search

Budgeted exhaustive search for monic right divisors of x^n - 1, the
admissible l polynomials of a (g, h) pair, and verification of
displayed factorizations.
"""
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Tuple

import galois
import numpy as np

from domain.entities.field import FieldSpec
from domain.entities.skew_poly import SkewPoly, right_divmod, right_rem, s_mul
from domain.errors import BudgetExceededError
from utils.config import DIVISOR_SEARCH_BUDGET, MAX_WORKERS
from utils.logging_config import log_performance, logger


def _candidate(spec: FieldSpec, i: int, d: int, index: int, elements) -> SkewPoly:
    """index-th monic degree-d polynomial; the constant term is the fastest digit"""
    q = spec.q
    coeffs = []
    for _ in range(d):
        index, digit = divmod(index, q)
        coeffs.append(elements[digit])
    coeffs.append(spec.one())
    return SkewPoly(spec, i, tuple(coeffs))


def right_divisors_search(n: int, d: int, spec: FieldSpec, i: int,
                          budget: Optional[int] = None,
                          workers: Optional[int] = None) -> List[SkewPoly]:
    """
    All monic degree-d right divisors of x^n - 1 over GF(q).

    Args:
        n: Length (x^n - 1)
        d: Divisor degree
        spec: Coefficient field
        i: Automorphism index
        budget: Largest number of candidates to try (DIVISOR_SEARCH_BUDGET)
        workers: Threads scanning contiguous candidate ranges

    Returns:
        Divisors in candidate order, independent of the worker count

    Raises:
        BudgetExceededError: q^d exceeds the budget
    """
    budget = DIVISOR_SEARCH_BUDGET if budget is None else budget
    workers = workers or MAX_WORKERS
    if d < 0 or d > n:
        return []
    total = spec.q ** d
    if total > budget:
        raise BudgetExceededError(f"divisor search for degree {d} over {spec.name}", total, budget)
    if d == 0:
        return [SkewPoly.one(spec, i)]

    target = SkewPoly.x_n_minus_one(spec, i, n)
    elements = list(spec.elements())

    def scan(bounds: Tuple[int, int]) -> List[SkewPoly]:
        found = []
        for index in range(*bounds):
            f = _candidate(spec, i, d, index, elements)
            if right_rem(target, f).is_zero:
                found.append(f)
        return found

    step = -(-total // workers)
    blocks = [(start, min(start + step, total)) for start in range(0, total, step)]
    start_time = time.time()
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(scan, blocks))
    divisors = [f for block in results for f in block]
    log_performance(
        f"divisor search x^{n}-1, degree {d}, {spec.name}",
        (time.time() - start_time) * 1000,
        work=total,
    )
    return divisors


@lru_cache(maxsize=256)
def cached_divisors(n: int, d: int, spec: FieldSpec, i: int, budget: int) -> Tuple[SkewPoly, ...]:
    return tuple(right_divisors_search(n, d, spec, i, budget))


def admissible_l_basis(g: SkewPoly, h: SkewPoly, s: int) -> List[SkewPoly]:
    """
    GF(p)-basis of {l : deg l < deg g, g |_r ((x^s - 1)/h) * l}.

    l -> ((x^s - 1)/h) * l mod g is additive, so the admissible set is the
    kernel of a GF(p)-linear map on coefficient vectors.
    """
    spec, i = g.field, g.i
    dg = g.degree
    if dg <= 0:
        return []
    m, p = spec.m, spec.p
    u = right_divmod(SkewPoly.x_n_minus_one(spec, i, s), h).quot

    images = []
    for j in range(dg):
        for a in range(m):
            unit = [0] * m
            unit[a] = 1
            l = SkewPoly.monomial(spec, i, j, spec.from_vector(unit))
            rem = right_rem(s_mul(u, l), g)
            images.append([c for k in range(dg) for c in rem.coefficient(k).vector])

    gf = galois.GF(p)
    kernel = gf(np.array(images, dtype=np.int64).T).null_space()
    basis = []
    for row in np.asarray(kernel, dtype=np.int64):
        coeffs = tuple(spec.from_vector(row[j * m:(j + 1) * m]) for j in range(dg))
        basis.append(SkewPoly(spec, i, coeffs))
    return basis


def random_admissible_l(g: SkewPoly, h: SkewPoly, s: int, rng: np.random.Generator) -> SkewPoly:
    """Uniform GF(p)-combination of the admissible basis"""
    total = SkewPoly.zero(g.field, g.i)
    for b in admissible_l_basis(g, h, s):
        c = int(rng.integers(g.field.p))
        if c:
            total = total + b.scale_left(g.field.literal(c))
    return total


@dataclass(frozen=True)
class FactorizationOutcome:
    product_matches: bool
    right_divides: bool
    quotient_matches: bool
    degree_consistent: bool


def verify_factorization(n: int, left: SkewPoly, right: SkewPoly) -> FactorizationOutcome:
    """
    Check x^n - 1 = left * right both by multiplication and by right
    division of x^n - 1 by right.
    """
    target = SkewPoly.x_n_minus_one(right.field, right.i, n)
    product = s_mul(left, right)
    quot, rem = right_divmod(target, right)
    outcome = FactorizationOutcome(
        product_matches=product == target,
        right_divides=rem.is_zero,
        quotient_matches=rem.is_zero and quot == left,
        degree_consistent=left.degree + right.degree == n,
    )
    logger.debug(f"factorization x^{n}-1: {outcome}")
    return outcome
