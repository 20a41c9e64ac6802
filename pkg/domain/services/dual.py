"""
Domain Service - Dual Codes

The dual of a double skew cyclic code is computed per idempotent
component by linear algebra: C_e is the F_q-code spanned by the component
rows and its orthogonal complement is again double skew cyclic. The
reciprocal-polynomial formulas for g_bar, h_bar and l_bar are evaluated
on top and compared with the computed generators.
"""
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from domain.entities.double_code import COMPONENTS, DoubleCodeSpec, DoubleWord, DualData
from domain.entities.field import FieldSpec
from domain.entities.gray import GrayMatrix, default_n
from domain.entities.linear_code import LinearCodeMatrix
from domain.entities.reports import Check
from domain.entities.ring import RingElement
from domain.entities.skew_poly import (
    FIELD_BASE,
    RING_BASE,
    SkewPoly,
    compose,
    decompose,
    format_poly,
    reciprocal_star,
    right_divmod,
    right_gcd,
    right_lcm,
    right_rem,
    s_mul,
    theta_map,
)
from domain.errors import StructuralError, TheoremPreconditionError
from domain.services import linalg
from domain.services.double_code_ops import (
    code_gray_matrix,
    component_rows,
    shift_closure_check,
    spanning_set,
    structure_degrees,
    t_shift,
    validate,
)
from utils.logging_config import logger


def xi(spec: FieldSpec, i: int, r: int, stride: int = 1, base: str = FIELD_BASE) -> SkewPoly:
    """xi_r(x^stride) = 1 + x^stride + ... + x^((r-1) stride)"""
    if r < 1:
        raise ValueError(f"xi needs r >= 1, got {r}")
    one = SkewPoly.one(spec, i, base)
    total = SkewPoly.zero(spec, i, base)
    for k in range(r):
        total = total + SkewPoly.monomial(spec, i, k * stride, one.coeffs[0], base)
    return total


def theta_order(spec: FieldSpec, i: int) -> int:
    """Order of theta_i as an automorphism of GF(p^m)"""
    return spec.m // gcd(i % spec.m, spec.m) if i % spec.m else 1


def _poly(spec: FieldSpec, i: int, codes: Sequence[int]) -> SkewPoly:
    return SkewPoly(spec, i, tuple(spec.from_code(int(c)) for c in codes))


def _twisted_reciprocal(f: SkewPoly, gamma: int) -> SkewPoly:
    """theta-map^(gamma - deg f) of f*"""
    return theta_map(reciprocal_star(f), gamma - f.degree)


# -- the circle product -------------------------------------------------------

def _circle_term(alpha: SkewPoly, beta: SkewPoly, n_block: int, gamma: int) -> SkewPoly:
    if alpha.is_zero or beta.is_zero:
        return SkewPoly.zero(alpha.field, alpha.i)
    d = beta.degree
    factor = s_mul(_twisted_reciprocal(beta, gamma), SkewPoly.monomial(alpha.field, alpha.i, gamma - 1 - d))
    return s_mul(s_mul(alpha, factor), xi(alpha.field, alpha.i, gamma // n_block, n_block))


def circle(alpha: Tuple[SkewPoly, SkewPoly], beta: Tuple[SkewPoly, SkewPoly], r: int, s: int) -> SkewPoly:
    """
    alpha o beta in R[x; theta] mod x^gamma - 1, gamma = lcm(r, s).

    alpha and beta are (left, right) pairs of polynomials over R with
    deg < r and deg < s. A zero component contributes nothing.
    """
    a1, a2 = alpha
    b1, b2 = beta
    spec, i = a1.field, a1.i
    gamma = r * s // gcd(r, s)
    modulus = SkewPoly.x_n_minus_one(spec, i, gamma)
    parts = []
    for e in range(2):
        a1e, b1e = decompose(a1)[e], decompose(b1)[e]
        a2e, b2e = decompose(a2)[e], decompose(b2)[e]
        total = _circle_term(a1e, b1e, r, gamma) + _circle_term(a2e, b2e, s, gamma)
        parts.append(right_rem(total, modulus))
    return compose(parts[0], parts[1])


def word_polys(w: DoubleWord, i: int) -> Tuple[SkewPoly, SkewPoly]:
    """(left, right) polynomials over R of a double word"""
    spec = w.left[0].field if w.left else w.right[0].field
    return SkewPoly(spec, i, w.left, RING_BASE), SkewPoly(spec, i, w.right, RING_BASE)


def inner_product(a: DoubleWord, b: DoubleWord) -> RingElement:
    total = RingElement.zero((a.left or a.right)[0].field)
    for x, y in zip(a.coordinates, b.coordinates):
        total = total + x * y
    return total


def circle_all_shifts_check(alpha: DoubleWord, beta: DoubleWord, i: int) -> bool:
    """alpha and every T-shift of alpha are orthogonal to beta"""
    cur = alpha
    while True:
        if not inner_product(cur, beta).is_zero:
            return False
        cur = t_shift(cur, i)
        if cur == alpha:
            return True


# -- authoritative dual -------------------------------------------------------

def _component_matrix(code: DoubleCodeSpec, idx: int) -> np.ndarray:
    rows = component_rows(code)
    selected = [codes for e, codes in rows["g"] + rows["lh"] if e == idx]
    if not selected:
        return np.zeros((0, code.n), dtype=np.int32)
    return np.array(selected, dtype=np.int32)


def _component_dual(code: DoubleCodeSpec, idx: int) -> Tuple[SkewPoly, SkewPoly, SkewPoly]:
    """
    (g_bar_e, l_bar_e, h_bar_e) of the orthogonal complement of C_e.

    The complement basis is reduced with the right block first and higher
    degrees first, so the last row with a right-block pivot carries the
    monic minimal h_bar and the last row overall with a left-block pivot
    carries the monic minimal g_bar.
    """
    spec, i, r, s = code.field, code.i, code.r, code.s
    basis = linalg.nullspace(spec, _component_matrix(code, idx), code.n)
    order = list(range(r + s - 1, r - 1, -1)) + list(range(r - 1, -1, -1))
    if basis.shape[0]:
        red, pivots = linalg.row_reduce(spec, basis, order)
    else:
        red, pivots = basis, []
    right_rows = [k for k, c in enumerate(pivots) if c >= r]
    left_rows = [k for k, c in enumerate(pivots) if c < r]

    if left_rows:
        g_bar = _poly(spec, i, red[left_rows[-1], :r])
    else:
        g_bar = SkewPoly.x_n_minus_one(spec, i, r)
    if right_rows:
        row = red[right_rows[-1]]
        h_bar = _poly(spec, i, row[r:])
        l_bar = right_rem(_poly(spec, i, row[:r]), g_bar)
    else:
        h_bar = SkewPoly.x_n_minus_one(spec, i, s)
        l_bar = SkewPoly.zero(spec, i)
    return g_bar, l_bar, h_bar


def nullspace_dual(code: DoubleCodeSpec, gray: Optional[GrayMatrix] = None) -> LinearCodeMatrix:
    """Basis of the orthogonal complement of the Gray image"""
    matrix = code_gray_matrix(code, gray)
    return matrix.nullspace(label=f"{code.label} parity" if code.label else "parity")


def dual_generators(code: DoubleCodeSpec, gray: Optional[GrayMatrix] = None) -> DualData:
    """
    Generator triple of the dual over R together with the Gray parity basis.

    Raises:
        StructuralError: the computed generators do not form a valid code
    """
    parts = [_component_dual(code, idx) for idx in range(2)]
    (gv, lv, hv), (gvp, lvp, hvp) = parts
    dual_code = DoubleCodeSpec(code.field, code.i, code.r, code.s, gv, gvp, lv, lvp, hv, hvp,
                               f"{code.label} dual" if code.label else "dual")
    report = validate(dual_code)
    if not report.is_valid:
        raise StructuralError(
            "computed dual generators violate the generator conditions: "
            + "; ".join(str(v) for v in report.violations)
        )
    logger.debug(f"dual generators of {code.label or 'code'}: {report.code.to_dict()}")
    return DualData(
        g_bar=compose(gv, gvp),
        l_bar=compose(report.code.l_v, report.code.l_vp),
        h_bar=compose(hv, hvp),
        parity=nullspace_dual(code, gray),
        gamma=code.gamma,
        dual_code=report.code,
    )


def dual_l_bar(code: DoubleCodeSpec) -> SkewPoly:
    return dual_generators(code).l_bar


def dual_generator_words(dual: DualData) -> List[DoubleWord]:
    """Spanning set of the dual built from (g_bar | 0), (l_bar | h_bar)"""
    return spanning_set(dual.dual_code)


# -- closed forms -------------------------------------------------------------

def dual_g_bar(code: DoubleCodeSpec) -> SkewPoly:
    """
    Per component (x^r - 1) / theta^(gamma-deg d)(d*) with d = gcd_r(g, l).

    Twisted reciprocals turn right divisors into left divisors, so d* is the
    greatest common left divisor of the reciprocals of g and l.

    Raises:
        TheoremPreconditionError: the right division is not exact
    """
    spec, i, gamma = code.field, code.i, code.gamma
    xr = SkewPoly.x_n_minus_one(spec, i, code.r)
    out = []
    for e in COMPONENTS:
        g, l, _ = code.component(e)
        d = right_gcd(g, l)
        quot, rem = right_divmod(xr, _twisted_reciprocal(d, gamma))
        if not rem.is_zero:
            raise TheoremPreconditionError(f"x^r-1 is not right-divisible for g_bar_{e}", format_poly(rem))
        out.append(quot.monic())
    return compose(out[0], out[1])


def j_component(g: SkewPoly, l: SkewPoly, h: SkewPoly) -> SkewPoly:
    """(lcm(g, l) / l) * h, or h when l = 0"""
    if l.is_zero:
        return h
    quot, rem = right_divmod(right_lcm(g, l), l)
    if not rem.is_zero:
        raise TheoremPreconditionError("l does not right-divide lcm(g, l)", format_poly(rem))
    return s_mul(quot, h)


def dual_h_bar(code: DoubleCodeSpec) -> SkewPoly:
    """
    Per component (x^s - 1) / theta^(gamma-deg j)(j*).

    Raises:
        TheoremPreconditionError: the right division is not exact
    """
    spec, i, gamma = code.field, code.i, code.gamma
    xs = SkewPoly.x_n_minus_one(spec, i, code.s)
    out = []
    for e in COMPONENTS:
        g, l, h = code.component(e)
        j = j_component(g, l, h)
        quot, rem = right_divmod(xs, _twisted_reciprocal(j, gamma))
        if not rem.is_zero:
            raise TheoremPreconditionError(f"x^s-1 is not right-divisible for h_bar_{e}", format_poly(rem))
        out.append(quot.monic())
    return compose(out[0], out[1])


def l_bar_form_checks(code: DoubleCodeSpec, dual: DualData, binding: bool) -> List[Check]:
    """(x^r - 1)/theta^(gamma-deg g)(g*) right-divides l_bar, both components"""
    spec, i = code.field, code.i
    xr = SkewPoly.x_n_minus_one(spec, i, code.r)
    checks = []
    for e, l_bar in zip(COMPONENTS, decompose(dual.l_bar)):
        g, _, _ = code.component(e)
        f, rem = right_divmod(xr, _twisted_reciprocal(g, code.gamma))
        if not rem.is_zero:
            checks.append(Check("l_bar closed form", False, f"x^r-1 not divisible, remainder {format_poly(rem)}",
                                e, binding))
            continue
        rem = right_rem(l_bar, f)
        checks.append(Check("l_bar closed form", rem.is_zero,
                            "" if rem.is_zero else f"remainder {format_poly(rem)}", e, binding))
    return checks


# -- property checks ----------------------------------------------------------

def degree_identity_checks(code: DoubleCodeSpec, dual: DualData) -> List[Check]:
    """deg g_bar_e = r - deg gcd(g_e, l_e) and deg h_bar_e = s - deg h_e - k_e"""
    k = structure_degrees(code)
    checks = []
    for e, g_bar, h_bar in zip(COMPONENTS, decompose(dual.g_bar), decompose(dual.h_bar)):
        g, l, h = code.component(e)
        want_g = code.r - right_gcd(g, l).degree
        want_h = code.s - h.degree - k[e]
        checks.append(Check("deg g_bar = r - deg gcd(g, l)", g_bar.degree == want_g,
                            f"{g_bar.degree} vs {want_g}", e))
        checks.append(Check("deg h_bar = s - deg h - k", h_bar.degree == want_h,
                            f"{h_bar.degree} vs {want_h}", e))
    return checks


def cardinality_exponents(code: DoubleCodeSpec) -> Dict[str, int]:
    """Exponents of q for C_r, C_s, (C^perp)_r, (C^perp)_s, (C_r)^perp, (C_s)^perp"""
    k = structure_degrees(code)
    out = {"C_r": 0, "C_s": 0, "dual_r": 0, "dual_s": 0, "C_r_perp": 0, "C_s_perp": 0}
    for e in COMPONENTS:
        g, l, h = code.component(e)
        gcd_deg = right_gcd(g, l).degree
        out["C_r"] += code.r - gcd_deg
        out["C_s"] += code.s - h.degree
        out["dual_r"] += g.degree
        out["dual_s"] += h.degree + k[e]
        out["C_r_perp"] += g.degree - k[e]
        out["C_s_perp"] += h.degree
    return out


def cardinality_checks(code: DoubleCodeSpec, matrix: LinearCodeMatrix, parity: LinearCodeMatrix) -> List[Check]:
    """Six exponent formulas against ranks of projections and nullspaces"""
    left_cols = list(range(2 * code.r))
    right_cols = list(range(2 * code.r, 2 * code.n))
    left = matrix.columns(left_cols)
    right = matrix.columns(right_cols)
    measured = {
        "C_r": left.rank,
        "C_s": right.rank,
        "dual_r": parity.columns(left_cols).rank,
        "dual_s": parity.columns(right_cols).rank,
        "C_r_perp": left.nullspace().rows,
        "C_s_perp": right.nullspace().rows,
    }
    formula = cardinality_exponents(code)
    return [
        Check(f"|{name}| exponent", measured[name] == formula[name], f"{measured[name]} vs {formula[name]}")
        for name in formula
    ]


def orthogonality_check(matrix: LinearCodeMatrix, parity: LinearCodeMatrix) -> Check:
    if matrix.rows == 0 or parity.rows == 0:
        return Check("parity rows orthogonal to generator rows", True)
    products = linalg.inner_products(matrix.field, matrix.entries, parity.entries)
    bad = int(np.count_nonzero(products))
    return Check("parity rows orthogonal to generator rows", bad == 0, f"{bad} nonzero products" if bad else "")


def dual_span_check(dual: DualData, gray: GrayMatrix, matrix: LinearCodeMatrix) -> Check:
    """Gray image of the dual generators equals the parity space"""
    dual_matrix = code_gray_matrix(dual.dual_code, gray)
    expected = dual.parity.rank
    ok = dual_matrix.rank == expected
    if ok and dual_matrix.rows and matrix.rows:
        ok = not np.any(linalg.inner_products(matrix.field, matrix.entries, dual_matrix.entries))
    return Check("dual generators span the parity space", ok, f"rank {dual_matrix.rank} vs {expected}")


def circle_checks(code: DoubleCodeSpec, dual: DualData, binding: bool) -> List[Check]:
    """
    The circle product vanishes on every (primal, dual) generator pair and
    agrees with the shifted inner products on each of them.
    """
    primal = spanning_set(code)
    words = dual_generator_words(dual)
    failures = disagreements = 0
    for a in primal:
        pa = word_polys(a, code.i)
        for b in words:
            vanishes = circle(pa, word_polys(b, code.i), code.r, code.s).is_zero
            if not vanishes:
                failures += 1
            if vanishes != circle_all_shifts_check(a, b, code.i):
                disagreements += 1
    pairs = len(primal) * len(words)
    return [
        Check("circle product vanishes on generator pairs", failures == 0,
              f"{failures} of {pairs} pairs nonzero" if failures else "", binding=binding),
        Check("circle product matches shifted inner products", disagreements == 0,
              f"{disagreements} of {pairs} pairs disagree" if disagreements else "", binding=binding),
    ]


def central_moduli(code: DoubleCodeSpec) -> bool:
    """x^r - 1 and x^s - 1 are central, i.e. ord(theta) divides r and s"""
    order = theta_order(code.field, code.i)
    return code.r % order == 0 and code.s % order == 0


def dual_checks(code: DoubleCodeSpec, dual: DualData, gray: Optional[GrayMatrix] = None) -> List[Check]:
    """
    All dual properties of a T-shift closed code.

    Closed forms and circle products bind when x^r - 1 and x^s - 1 are
    central; otherwise they are reported.
    """
    gray = gray or default_n(code.field)
    matrix = code_gray_matrix(code, gray)
    central = central_moduli(code)
    checks = parity_checks(code, matrix, dual.parity)
    checks += [
        dual_span_check(dual, gray, matrix),
        shift_closure_check(dual.dual_code, gray, binding=True),
    ]
    checks.extend(degree_identity_checks(code, dual))
    checks.extend(cardinality_checks(code, matrix, dual.parity))
    checks.extend(closed_form_checks(code, dual, central))
    checks.extend(circle_checks(code, dual, central))
    return checks


def parity_checks(code: DoubleCodeSpec, matrix: LinearCodeMatrix, parity: LinearCodeMatrix) -> List[Check]:
    """Checks that hold for the Gray parity basis of any code"""
    return [
        orthogonality_check(matrix, parity),
        Check("|C| |C_perp| = q^(2(r+s))", matrix.rank + parity.rows == code.gray_length,
              f"{matrix.rank} + {parity.rows} vs {code.gray_length}"),
    ]


def closed_form_checks(code: DoubleCodeSpec, dual: DualData, binding: bool) -> List[Check]:
    checks = []
    for name, formula, computed in (("g_bar", dual_g_bar, dual.g_bar), ("h_bar", dual_h_bar, dual.h_bar)):
        try:
            value = formula(code)
        except TheoremPreconditionError as e:
            checks.append(Check(f"{name} closed form", False, str(e), binding=binding))
            continue
        for e, got, want in zip(COMPONENTS, decompose(value), decompose(computed)):
            checks.append(Check(f"{name} closed form", got == want,
                                "" if got == want else f"{format_poly(got)} vs {format_poly(want)}",
                                e, binding))
    checks.extend(l_bar_form_checks(code, dual, binding))
    return checks


def closed_forms(code: DoubleCodeSpec) -> Dict[str, str]:
    """Closed-form g_bar and h_bar as text, or the precondition failure"""
    out = {}
    for name, formula in (("g_bar", dual_g_bar), ("h_bar", dual_h_bar)):
        try:
            out[name] = format_poly(formula(code))
        except TheoremPreconditionError as e:
            out[name] = f"undefined: {e}"
    return out
