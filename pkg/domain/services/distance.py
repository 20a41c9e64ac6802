"""
Domain Service - Minimum Distance

Exhaustive enumeration (oracle), Brouwer-Zimmermann with disjoint
information sets interleaved with parity-check column levels, and a cheap
upper bound. Enumeration is vectorised over chunks of codewords using the
field's dense tables; chunks are evaluated on a thread pool in fixed-size
rounds and merged in order, so results do not depend on the worker count.
"""
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import islice
from math import comb
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from domain.entities.field import FieldSpec
from domain.entities.linear_code import DistanceResult, LinearCodeMatrix
from domain.errors import BudgetExceededError
from domain.services import linalg
from utils.config import (
    CHUNK_CODEWORDS,
    DISTANCE_BUDGET_OPS,
    DISTANCE_BUDGET_SECS,
    EXHAUSTIVE_BUDGET,
    MAX_WORKERS,
    ROUND_CHUNKS,
)
from utils.logging_config import log_distance_progress, log_performance, logger

METHOD_EXHAUSTIVE = "exhaustive"
METHOD_BZ = "brouwer-zimmermann"
METHOD_EMPTY = "empty"


@dataclass(frozen=True)
class InformationSet:
    """Systematic generator for one information set; rank < k for a deficient set"""
    generator: np.ndarray
    columns: Tuple[int, ...]
    rank: int


def _full_rank(matrix: LinearCodeMatrix) -> Tuple[LinearCodeMatrix, List[str]]:
    notes = []
    if matrix.rows and not matrix.is_full_rank:
        notes.append(f"rank-deficient input reduced from {matrix.rows} to {matrix.rank} rows")
        logger.info(notes[-1], extra={"code_label": matrix.label})
        matrix = matrix.row_basis()
    return matrix, notes


def _empty_result(matrix: LinearCodeMatrix, notes: List[str]) -> DistanceResult:
    return DistanceResult(0, None, method=METHOD_EMPTY, notes=tuple(notes + ["no nonzero codeword"]))


def _messages(indices: np.ndarray, k: int, q: int) -> np.ndarray:
    """Base-q digits of message indices, first row of the generator fastest"""
    out = np.zeros((indices.size, k), dtype=np.int32)
    rest = indices.astype(np.int64)
    for j in range(k):
        rest, out[:, j] = np.divmod(rest, q)
    return out


def min_distance_exhaustive(matrix: LinearCodeMatrix, budget: Optional[int] = None) -> DistanceResult:
    """
    Exact minimum distance over all q^k - 1 nonzero messages.

    Raises:
        BudgetExceededError: q^k exceeds the budget
    """
    budget = EXHAUSTIVE_BUDGET if budget is None else budget
    matrix, notes = _full_rank(matrix)
    spec, k = matrix.field, matrix.rows
    if k == 0:
        return _empty_result(matrix, notes)
    total = spec.q ** k
    if total > budget:
        raise BudgetExceededError("exhaustive distance", total, budget)

    start = time.time()
    best, witness = None, None
    for lo in range(1, total, CHUNK_CODEWORDS):
        idx = np.arange(lo, min(lo + CHUNK_CODEWORDS, total))
        words = linalg.combine(spec, _messages(idx, k, spec.q), matrix.entries)
        w = linalg.weights(words)
        pos = int(np.argmin(w))
        if best is None or w[pos] < best:
            best, witness = int(w[pos]), tuple(int(c) for c in words[pos])
    elapsed = (time.time() - start) * 1000
    log_performance(f"exhaustive distance {matrix.label}", elapsed, work=total - 1)
    return DistanceResult(best, best, witness, total - 1, METHOD_EXHAUSTIVE, elapsed, tuple(notes))


# -- information sets ---------------------------------------------------------

def information_sets(matrix: LinearCodeMatrix) -> List[InformationSet]:
    """
    Disjoint information sets by repeated elimination on unused columns.

    Each generator is systematic on its own set (identity in the first
    rank rows) and completed to full rank with previously used columns.
    """
    spec, k, n = matrix.field, matrix.rows, matrix.n
    used: List[int] = []
    sets: List[InformationSet] = []
    while len(used) < n:
        free = [c for c in range(n) if c not in set(used)]
        _, pivots = linalg.row_reduce(spec, matrix.entries, free)
        if not pivots:
            break
        rest = [c for c in range(n) if c not in set(pivots)]
        generator, _ = linalg.row_reduce(spec, matrix.entries, list(pivots) + rest)
        sets.append(InformationSet(generator, tuple(pivots), len(pivots)))
        used.extend(pivots)
        if len(pivots) < k:
            break
    return sets


# -- enumeration --------------------------------------------------------------

def colex_supports(k: int, w: int) -> Iterator[Tuple[int, ...]]:
    """w-subsets of range(k) in colexicographic order"""
    if w == 0:
        yield ()
        return
    for top in range(w - 1, k):
        for rest in colex_supports(top, w - 1):
            yield rest + (top,)


def _patterns(lo: int, hi: int, w: int, q: int) -> np.ndarray:
    """Coefficient patterns lo..hi-1: first entry 1, the rest odometer over nonzero codes"""
    out = np.ones((hi - lo, w), dtype=np.int32)
    rest = np.arange(lo, hi, dtype=np.int64)
    for t in range(w - 1, 0, -1):
        rest, digit = np.divmod(rest, q - 1)
        out[:, t] = digit + 1
    return out


@dataclass(frozen=True)
class _Chunk:
    supports: np.ndarray
    patterns: np.ndarray

    @property
    def size(self) -> int:
        return self.supports.shape[0] * self.patterns.shape[0]


def _level_chunks(k: int, w: int, q: int, chunk: int) -> Iterator[_Chunk]:
    n_patterns = (q - 1) ** (w - 1)
    supports = colex_supports(k, w)
    if n_patterns <= chunk:
        patterns = _patterns(0, n_patterns, w, q)
        per_chunk = max(1, chunk // n_patterns)
        while True:
            batch = list(islice(supports, per_chunk))
            if not batch:
                return
            yield _Chunk(np.array(batch, dtype=np.int64), patterns)
    else:
        for support in supports:
            sup = np.array([support], dtype=np.int64)
            for lo in range(0, n_patterns, chunk):
                yield _Chunk(sup, _patterns(lo, min(lo + chunk, n_patterns), w, q))


def _evaluate(spec: FieldSpec, generator: np.ndarray, chunk: _Chunk) -> Tuple[int, Optional[np.ndarray]]:
    """Lowest weight in the chunk and one codeword attaining it"""
    tab = spec.tables
    rows = generator[chunk.supports]
    n = generator.shape[1]
    acc = np.zeros((chunk.supports.shape[0], chunk.patterns.shape[0], n), dtype=np.int32)
    for t in range(chunk.patterns.shape[1]):
        term = tab.mul[chunk.patterns[None, :, t, None], rows[:, None, t, :]]
        acc = tab.add[acc, term]
    weights = np.count_nonzero(acc, axis=2)
    flat = int(np.argmin(weights))
    s, p = divmod(flat, weights.shape[1])
    return int(weights[s, p]), acc[s, p].copy()


def _lower_bound(sets: Sequence[InformationSet], k: int, w_done: Sequence[int]) -> int:
    """Sum over sets of max(0, w_j + 1 - (k - rank_j)), w_j the last completed level"""
    return sum(max(0, w + 1 - (k - s.rank)) for s, w in zip(sets, w_done))


def _level_cost(sets: Sequence[InformationSet], k: int, q: int, w: int) -> int:
    return sum(planned_work(k, q, w) for s in sets if w + 1 - (k - s.rank) > 0)


@dataclass
class _Progress:
    """Bounds, witness and spent work of one distance run"""
    lower: int
    upper: int
    witness: np.ndarray
    work: int
    budget_ops: int
    budget_secs: float
    start: float
    notes: List[str]
    exhausted: bool = False

    def offer(self, weight: int, word: np.ndarray):
        if 0 < weight < self.upper:
            self.upper, self.witness = weight, word

    def stop(self, where: str):
        self.exhausted = True
        self.notes.append(f"budget reached at {where}: work {self.work}, "
                          f"{round(time.time() - self.start, 3)} s")

    @property
    def out_of_time(self) -> bool:
        return time.time() - self.start > self.budget_secs


def _enumerate_level(pool: ThreadPoolExecutor, spec: FieldSpec, info: InformationSet, k: int, w: int,
                     chunk: int, progress: _Progress, where: str) -> bool:
    """
    All level-w codewords through one information set.

    Chunks are admitted one by one in colex order until the next one would
    pass the ops budget; each round of ROUND_CHUNKS admitted chunks is then
    evaluated on the pool. Returns True when the level was completed.
    """
    chunks = _level_chunks(k, w, spec.q, chunk)
    while True:
        pending = list(islice(chunks, ROUND_CHUNKS))
        if not pending:
            return True
        if progress.out_of_time:
            progress.stop(where)
            return False
        admitted, planned = [], progress.work
        for c in pending:
            if planned + c.size > progress.budget_ops:
                break
            admitted.append(c)
            planned += c.size
        results = pool.map(lambda c: _evaluate(spec, info.generator, c), admitted)
        for c, (weight, word) in zip(admitted, results):
            progress.work += c.size
            progress.offer(weight, word)
        if len(admitted) < len(pending):
            progress.stop(where)
            return False
        if progress.upper <= progress.lower:
            return False


# -- parity-check columns -----------------------------------------------------

def _dependent_columns(spec: FieldSpec, parity: np.ndarray, subsets: np.ndarray) -> np.ndarray:
    """
    True for every column subset of the parity-check matrix that is
    linearly dependent. Gaussian elimination runs on all subsets at once.
    """
    tab = spec.tables
    m = parity.shape[0]
    b, t = subsets.shape
    if t > m:
        return np.ones(b, dtype=bool)
    work = np.transpose(parity[:, subsets], (1, 0, 2)).copy()
    dependent = np.zeros(b, dtype=bool)
    batch = np.arange(b)
    for j in range(t):
        nonzero = work[:, j:, j] != 0
        dependent |= ~nonzero.any(axis=1)
        pivot = j + np.argmax(nonzero, axis=1)
        top = work[batch, j].copy()
        work[batch, j] = work[batch, pivot]
        work[batch, pivot] = top
        row = work[batch, j]
        # zero pivots have inverse code 0, so dependent subsets are left alone
        factor = tab.mul[work[:, j + 1:, j], tab.inv[row[:, j]][:, None]]
        work[:, j + 1:] = tab.sub[work[:, j + 1:], tab.mul[factor[:, :, None], row[:, None, :]]]
    return dependent


def _kernel_word(spec: FieldSpec, parity: np.ndarray, support: Sequence[int]) -> np.ndarray:
    """Codeword supported inside a dependent column set"""
    cols = list(support)
    kernel = linalg.nullspace(spec, parity[:, cols], len(cols))
    word = np.zeros(parity.shape[1], dtype=np.int32)
    word[cols] = kernel[0]
    return word


def _parity_level(spec: FieldSpec, parity: np.ndarray, t: int, chunk: int, progress: _Progress) -> bool:
    """
    Test every t-subset of parity-check columns, colex order.

    When all are independent no nonzero codeword has weight t or less. The
    first dependent subset carries a codeword of weight at most t, offered
    as the new upper bound. Each subset counts t towards the work. Returns
    True when the level was completed or a dependent subset was found.
    """
    n = parity.shape[1]
    per_chunk = max(1, chunk // t)
    subsets = colex_supports(n, t)
    while True:
        batch = list(islice(subsets, per_chunk))
        if not batch:
            return True
        cost = len(batch) * t
        if progress.work + cost > progress.budget_ops or progress.out_of_time:
            progress.stop(f"parity columns, subset size {t}")
            return False
        dependent = _dependent_columns(spec, parity, np.array(batch, dtype=np.int64))
        progress.work += cost
        if dependent.any():
            word = _kernel_word(spec, parity, batch[int(np.argmax(dependent))])
            progress.offer(int(np.count_nonzero(word)), word)
            return True


def min_distance_bz(matrix: LinearCodeMatrix, budget_ops: Optional[int] = None,
                    budget_secs: Optional[float] = None, workers: Optional[int] = None,
                    chunk: Optional[int] = None) -> DistanceResult:
    """
    Brouwer-Zimmermann minimum distance, interleaved with parity-check
    column levels.

    Each step runs whichever is cheaper: the next enumeration level on the
    information sets, or testing every lower-sized subset of parity-check
    columns for independence. The first can lower the upper bound and
    raises the lower bound through the information-set ranks; the second
    raises the lower bound by one or settles d.

    Args:
        matrix: Generator matrix (row-reduced first when rank-deficient)
        budget_ops: Largest amount of work; codewords enumerated plus t per tested t-subset
        budget_secs: Wall-clock budget, checked between rounds
        workers: Threads evaluating chunks
        chunk: Codewords per chunk

    Returns:
        DistanceResult; exact when lower meets upper, bounds otherwise.
        Work and bounds do not depend on the worker count.
    """
    budget_ops = DISTANCE_BUDGET_OPS if budget_ops is None else budget_ops
    budget_secs = DISTANCE_BUDGET_SECS if budget_secs is None else budget_secs
    workers = workers or MAX_WORKERS
    chunk = chunk or CHUNK_CODEWORDS

    matrix, notes = _full_rank(matrix)
    spec, k, n, q = matrix.field, matrix.rows, matrix.n, matrix.field.q
    if k == 0:
        return _empty_result(matrix, notes)

    start = time.time()
    sets = information_sets(matrix)
    label = matrix.label or "code"
    logger.debug(f"{label}: information set ranks {[s.rank for s in sets]}")
    parity = matrix.nullspace().entries if k < n else None

    first = sets[0].generator
    row_weights = linalg.weights(first)
    best_row = int(np.argmin(row_weights))
    w_done = [0] * len(sets)
    progress = _Progress(
        lower=max(1, _lower_bound(sets, k, w_done)),
        upper=int(row_weights[best_row]),
        witness=first[best_row].copy(),
        work=k,
        budget_ops=budget_ops,
        budget_secs=budget_secs,
        start=start,
        notes=notes,
    )
    w = 1
    parity_lower = 0

    with ThreadPoolExecutor(max_workers=workers) as pool:
        while progress.lower < progress.upper and not progress.exhausted and w <= k:
            t = progress.lower
            column_cost = comb(n, t) * t if parity is not None else None
            if column_cost is not None and column_cost < _level_cost(sets, k, q, w):
                if _parity_level(spec, parity, t, chunk, progress) and progress.upper > t:
                    progress.lower = parity_lower = t + 1
                log_distance_progress(label, t, min(progress.lower, progress.upper), progress.upper,
                                      progress.work, stage="parity columns")
                continue

            for j, info in enumerate(sets):
                if w + 1 - (k - info.rank) <= 0:
                    w_done[j] = w
                    continue
                if not _enumerate_level(pool, spec, info, k, w, chunk, progress, f"level {w}, set {j}"):
                    break
                w_done[j] = w
                progress.lower = max(progress.lower, _lower_bound(sets, k, w_done))
                if progress.lower >= progress.upper:
                    break
            log_distance_progress(label, w, min(progress.lower, progress.upper), progress.upper, progress.work)
            if w_done[0] == k:
                progress.lower = progress.upper
            w += 1

    if parity_lower:
        notes.append(f"parity-check columns: every {parity_lower - 1}-subset independent")
    lower, upper = min(progress.lower, progress.upper), progress.upper
    elapsed = (time.time() - start) * 1000
    log_performance(f"distance {label}", elapsed, work=progress.work, lower=lower, upper=upper)
    return DistanceResult(lower, upper, tuple(int(c) for c in progress.witness), progress.work, METHOD_BZ,
                          elapsed, tuple(notes))


def distance_upper_bound(matrix: LinearCodeMatrix, max_message_weight: int) -> Optional[int]:
    """
    Lowest weight among codewords from messages of support size at most
    max_message_weight through one information set; None without nonzero
    codewords.
    """
    matrix, _ = _full_rank(matrix)
    spec, k, q = matrix.field, matrix.rows, matrix.field.q
    if k == 0:
        return None
    generator = information_sets(matrix)[0].generator
    best = int(np.min(linalg.weights(generator)))
    for w in range(1, min(max_message_weight, k) + 1):
        for c in _level_chunks(k, w, q, CHUNK_CODEWORDS):
            weight, _ = _evaluate(spec, generator, c)
            if 0 < weight < best:
                best = weight
    return best


def planned_work(k: int, q: int, w: int) -> int:
    """Codewords enumerated per information set at level w"""
    return comb(k, w) * (q - 1) ** (w - 1)
