"""
Application Layer - Search Codes Use Case

Enumerates (g, h) divisor pairs per component within degree bounds, draws
an admissible l for each from a seeded generator and streams the
parameters found, marking every new best.
"""
from dataclasses import dataclass
from itertools import islice, product
from typing import Callable, Iterator, Optional, Tuple

import numpy as np

from domain.entities import Budgets, DoubleCodeSpec, FieldSpec, SearchRecord, SearchReport, default_n
from domain.entities.reports import PASS, REFUSED
from domain.errors import BudgetExceededError
from domain.services.divisor_search import cached_divisors, random_admissible_l
from domain.services.double_code_ops import code_gray_matrix, validate
from application.use_cases.common import compute_distance
from utils.config import DIVISOR_SEARCH_BUDGET, SEARCH_MAX_CODES
from utils.logging_config import logger


@dataclass(frozen=True)
class DegreeBounds:
    """Inclusive degree ranges for g_e (divisors of x^r - 1) and h_e (of x^s - 1)"""
    g_min: int
    g_max: int
    h_min: int
    h_max: int

    def __post_init__(self):
        if min(self.g_min, self.h_min) < 0:
            raise ValueError("degree bounds must be non-negative")

    @property
    def empty(self) -> bool:
        return self.g_min > self.g_max or self.h_min > self.h_max


class SearchCodesUseCase:
    """
    Use case for parameter search.

    Deterministic for a fixed seed, budget and bound set: divisors come in
    candidate order and l draws use one generator in enumeration order.
    """

    def __init__(self, divisor_budget: int = DIVISOR_SEARCH_BUDGET):
        self._divisor_budget = divisor_budget

    def execute(self, spec: FieldSpec, i: int, r: int, s: int, bounds: DegreeBounds,
                budgets: Optional[Budgets] = None, max_codes: int = SEARCH_MAX_CODES,
                on_record: Optional[Callable[[SearchRecord], None]] = None) -> SearchReport:
        """
        Search codes of length (r, s).

        Args:
            spec: Coefficient field
            i: Automorphism index
            r, s: Block lengths
            bounds: Degree bounds for g and h
            budgets: Distance budgets and seed
            max_codes: Largest number of candidates evaluated
            on_record: Called with every evaluated candidate, in order

        Returns:
            SearchReport; "refused" when a divisor search exceeds its budget
        """
        budgets = budgets or Budgets()
        if bounds.empty:
            return SearchReport(PASS, spec.name, message="empty degree range")
        gray = default_n(spec)
        rng = np.random.default_rng(budgets.seed)

        records = []
        best: Optional[Tuple[int, int]] = None
        count = 0
        try:
            for count, (gv, gvp, hv, hvp) in enumerate(islice(self._pairs(spec, i, r, s, bounds), max_codes), 1):
                lv = random_admissible_l(gv, hv, s, rng)
                lvp = random_admissible_l(gvp, hvp, s, rng)
                candidate = DoubleCodeSpec(spec, i, r, s, gv, gvp, lv, lvp, hv, hvp, f"search-{count}")
                validation = validate(candidate)
                if not validation.is_valid:
                    logger.warning(f"search candidate {count} invalid: {validation.violations}")
                    continue
                matrix = code_gray_matrix(validation.code, gray)
                if matrix.rank == 0:
                    continue
                distance = compute_distance(matrix, budgets)
                score = (distance.lower, matrix.rank)
                improved = best is None or score > best
                if improved:
                    best = score
                    logger.info(
                        f"search best so far #{count}: [{matrix.n}, {matrix.rank}, {distance.describe()}]",
                        extra={"code_label": candidate.label},
                    )
                record = SearchRecord(count, validation.code.to_dict(), matrix.n, matrix.rank, distance, improved)
                records.append(record)
                if on_record is not None:
                    on_record(record)
        except BudgetExceededError as e:
            logger.warning(f"search refused: {e}")
            return SearchReport(REFUSED, spec.name, tuple(records), count, str(e))
        return SearchReport(PASS, spec.name, tuple(records), count)

    def _pairs(self, spec: FieldSpec, i: int, r: int, s: int,
               bounds: DegreeBounds) -> Iterator[tuple]:
        g_degrees = range(bounds.g_min, min(bounds.g_max, r) + 1)
        h_degrees = range(bounds.h_min, min(bounds.h_max, s) + 1)
        for dgv, dgvp, dhv, dhvp in product(g_degrees, g_degrees, h_degrees, h_degrees):
            yield from product(
                cached_divisors(r, dgv, spec, i, self._divisor_budget),
                cached_divisors(r, dgvp, spec, i, self._divisor_budget),
                cached_divisors(s, dhv, spec, i, self._divisor_budget),
                cached_divisors(s, dhvp, spec, i, self._divisor_budget),
            )
