"""
Domain Service - Block Construction

Builds G' = [[G, G*], [L, H]] of width 2(r+s) from the Gray image G of
the <g> rows and the Gray image [L | H] of the (l | h) rows, where G* is
G itself (r = s), G zero-padded to width 2s (r < s) or the first 2s
columns of G (r > s).
"""
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from domain.entities.double_code import DoubleCodeSpec
from domain.entities.gray import GrayMatrix, default_n
from domain.entities.linear_code import DistanceResult, LinearCodeMatrix
from domain.entities.reports import Check
from domain.errors import StructuralError
from domain.services.distance import min_distance_bz
from domain.services.double_code_ops import code_gray_matrix, component_rows
from domain.services.gray_map import phi_component_rows
from utils.logging_config import logger

CASE_EQUAL = "r = s"
CASE_SHORT = "r < s"
CASE_LONG = "r > s"


@dataclass(frozen=True)
class ConstructionInput:
    """G: rows x 2r image of the g rows; LH: rows x 2(r+s) image of the (l | h) rows"""
    G: LinearCodeMatrix
    LH: LinearCodeMatrix


@dataclass(frozen=True)
class ConstructionEvaluation:
    case: str
    before: LinearCodeMatrix
    after: LinearCodeMatrix
    d_before: DistanceResult
    d_after: DistanceResult
    checks: List[Check]


def construction_case(r: int, s: int) -> str:
    if r == s:
        return CASE_EQUAL
    return CASE_SHORT if r < s else CASE_LONG


def construction_input(code: DoubleCodeSpec, gray: Optional[GrayMatrix] = None) -> ConstructionInput:
    gray = gray or default_n(code.field)
    rows = component_rows(code)
    return ConstructionInput(
        G=phi_component_rows(rows["g"], gray, code.r, f"{code.label} G".strip()),
        LH=phi_component_rows(rows["lh"], gray, code.n, f"{code.label} LH".strip()),
    )


def build_construction(inp: ConstructionInput, r: int, s: int, label: str = "") -> LinearCodeMatrix:
    """
    Assemble G'.

    Raises:
        StructuralError: input widths are not 2r and 2(r+s)
    """
    G, LH = inp.G, inp.LH
    if G.n != 2 * r or LH.n != 2 * (r + s):
        raise StructuralError(
            f"construction input widths {G.n} and {LH.n}, expected {2 * r} and {2 * (r + s)}"
        )
    g = G.entries
    if r < s:
        tail = np.concatenate([g, np.zeros((g.shape[0], 2 * (s - r)), dtype=np.int32)], axis=1)
    else:
        tail = g[:, :2 * s]
    top = np.concatenate([g, tail], axis=1)
    out = np.concatenate([top, LH.entries], axis=0)
    if out.shape[1] != 2 * (r + s):
        raise StructuralError(f"G' has width {out.shape[1]}, expected {2 * (r + s)}")
    logger.debug(f"construction {construction_case(r, s)}: {out.shape[0]}x{out.shape[1]}")
    return LinearCodeMatrix(G.field, out, label)


def construction_checks(inp: ConstructionInput, matrix: LinearCodeMatrix, r: int, s: int) -> List[Check]:
    rows = inp.G.rows + inp.LH.rows
    return [
        Check("G' width = 2(r+s)", matrix.n == 2 * (r + s), f"{matrix.n}"),
        Check("G' rows = rows(G) + rows(LH)", matrix.rows == rows, f"{matrix.rows} vs {rows}"),
        Check("rank(G') = rows(G')", matrix.rank == matrix.rows,
              f"rank {matrix.rank} of {matrix.rows}", binding=False),
    ]


def evaluate_construction(code: DoubleCodeSpec, gray: Optional[GrayMatrix] = None,
                          budget_ops: Optional[int] = None, budget_secs: Optional[float] = None,
                          workers: Optional[int] = None) -> ConstructionEvaluation:
    """Distance of the plain Gray image and of G' under the same budgets"""
    gray = gray or default_n(code.field)
    label = code.label or "code"
    before = code_gray_matrix(code, gray)
    inp = construction_input(code, gray)
    after = build_construction(inp, code.r, code.s, f"{label} G'")
    d_before = min_distance_bz(before, budget_ops, budget_secs, workers)
    d_after = min_distance_bz(after, budget_ops, budget_secs, workers)
    logger.info(
        f"construction {label}: d {d_before.describe()} -> {d_after.describe()}",
        extra={"code_label": label},
    )
    return ConstructionEvaluation(
        construction_case(code.r, code.s), before, after, d_before, d_after,
        construction_checks(inp, after, code.r, code.s),
    )
