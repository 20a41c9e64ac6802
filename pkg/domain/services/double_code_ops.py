"""
Domain Service - Double Skew Cyclic Code Operations

Validation, normalization, the T-shift, the minimal spanning set and its
Gray image, cardinality bookkeeping and the derived divisibilities.
"""
from typing import Dict, List, Optional, Tuple

import numpy as np

from domain.entities.double_code import (
    COMPONENTS,
    Cardinality,
    DoubleCodeSpec,
    DoubleWord,
    RingMatrix,
    ValidationReport,
    Violation,
)
from domain.entities.gray import GrayMatrix, default_n
from domain.entities.linear_code import LinearCodeMatrix
from domain.entities.reports import Check
from domain.entities.ring import RingElement, crt_join, r_theta
from domain.entities.skew_poly import (
    SkewPoly,
    compose,
    decompose,
    format_poly,
    right_divmod,
    right_gcd,
    right_lcm,
    right_rem,
    s_mul,
)
from domain.errors import InvalidCodeError
from domain.services.gray_map import phi_codes, phi_component_rows
from utils.logging_config import logger

# A spanning row in component form: (0 for v / 1 for v', field codes of length r + s)
ComponentRow = Tuple[int, np.ndarray]


def _divides(f: SkewPoly, g: SkewPoly) -> Tuple[bool, SkewPoly]:
    rem = right_rem(g, f)
    return rem.is_zero, rem


def validate(candidate: DoubleCodeSpec) -> ValidationReport:
    """
    Check the generator conditions on both idempotent components.

    g_e and h_e must be monic right divisors of x^r - 1 and x^s - 1. A valid
    candidate comes back normalized in report.code. Whether g_e also
    right-divides ((x^s - 1)/h_e) * l_e is reported by module_condition_checks.
    """
    spec, i = candidate.field, candidate.i
    xr = SkewPoly.x_n_minus_one(spec, i, candidate.r)
    xs = SkewPoly.x_n_minus_one(spec, i, candidate.s)
    violations: List[Violation] = []

    for e in COMPONENTS:
        g, _, h = candidate.component(e)
        if not g.is_monic():
            violations.append(Violation(f"g_{e} monic", e, format_poly(g)))
        elif g.degree > candidate.r:
            violations.append(Violation(f"deg g_{e} <= r", e, format_poly(g)))
        else:
            ok, rem = _divides(g, xr)
            if not ok:
                violations.append(Violation(f"g_{e} |_r x^r-1", e, format_poly(rem)))
        if not h.is_monic():
            violations.append(Violation(f"h_{e} monic", e, format_poly(h)))
        elif h.degree > candidate.s:
            violations.append(Violation(f"deg h_{e} <= s", e, format_poly(h)))
        else:
            ok, rem = _divides(h, xs)
            if not ok:
                violations.append(Violation(f"h_{e} |_r x^s-1", e, format_poly(rem)))

    if violations:
        logger.info(
            f"Code {candidate.label or 'unnamed'} failed validation: "
            + "; ".join(str(v) for v in violations),
            extra={"code_label": candidate.label},
        )
        return ValidationReport(tuple(violations))
    return ValidationReport((), normalize_l(candidate))


def require_valid(candidate: DoubleCodeSpec) -> DoubleCodeSpec:
    """Normalized code, or InvalidCodeError carrying the violation report"""
    report = validate(candidate)
    if not report.is_valid:
        raise InvalidCodeError(report)
    return report.code


def normalize_l(code: DoubleCodeSpec) -> DoubleCodeSpec:
    """Replace l_e by its right remainder modulo g_e"""
    return code.with_l(right_rem(code.l_v, code.g_v), right_rem(code.l_vp, code.g_vp))


# -- shift and spanning set ---------------------------------------------------

def t_shift(w: DoubleWord, i: int) -> DoubleWord:
    """Cyclic shift of both blocks followed by theta_i on every coordinate"""
    def rotate(block):
        if not block:
            return block
        return tuple(r_theta(c, i) for c in (block[-1],) + block[:-1])
    return DoubleWord(rotate(w.left), rotate(w.right))


def _shift_codes(row: np.ndarray, r: int, frob: np.ndarray) -> np.ndarray:
    """t_shift on a pure-component row of field codes"""
    left, right = row[:r], row[r:]
    return frob[np.concatenate([left[-1:], left[:-1], right[-1:], right[:-1]])]


def _codes(poly: SkewPoly, length: int) -> np.ndarray:
    out = np.zeros(length, dtype=np.int32)
    for k, c in enumerate(poly.coeffs):
        out[k] = c.code
    return out


def _block_rem(poly: SkewPoly, n: int) -> SkewPoly:
    if poly.degree < n:
        return poly
    return right_rem(poly, SkewPoly.x_n_minus_one(poly.field, poly.i, n))


def component_rows(code: DoubleCodeSpec) -> Dict[str, List[ComponentRow]]:
    """
    Spanning rows in component form.

    Returns:
        {"g": rows of x^k (g_e | 0), "lh": rows of x^k (l_e | h_e)}, each
        listing the v rows before the v' rows
    """
    r, s = code.r, code.s
    frob = code.field.frobenius_table(code.i)
    out: Dict[str, List[ComponentRow]] = {"g": [], "lh": []}
    for idx, e in enumerate(COMPONENTS):
        g, _, _ = code.component(e)
        cur = np.concatenate([_codes(_block_rem(g, r), r), np.zeros(s, dtype=np.int32)])
        for _ in range(r - g.degree):
            out["g"].append((idx, cur))
            cur = _shift_codes(cur, r, frob)
    for idx, e in enumerate(COMPONENTS):
        _, l, h = code.component(e)
        cur = np.concatenate([_codes(_block_rem(l, r), r), _codes(_block_rem(h, s), s)])
        for _ in range(s - h.degree):
            out["lh"].append((idx, cur))
            cur = _shift_codes(cur, r, frob)
    return out


def _embed(idx: int, codes: np.ndarray, code: DoubleCodeSpec) -> Tuple[RingElement, ...]:
    spec = code.field
    zero = spec.zero()
    out = []
    for c in codes:
        x = spec.from_code(int(c))
        out.append(crt_join(x, zero) if idx == 0 else crt_join(zero, x))
    return tuple(out)


def spanning_set(code: DoubleCodeSpec) -> List[DoubleWord]:
    """Minimal spanning set: x^k (g_v v | 0), x^k (g_v' v' | 0), x^k (l_v v | h_v v), x^k (l_v' v' | h_v' v')"""
    rows = component_rows(code)
    words = []
    for idx, codes in rows["g"] + rows["lh"]:
        coords = _embed(idx, codes, code)
        words.append(DoubleWord(coords[:code.r], coords[code.r:]))
    return words


def generator_matrix_R(code: DoubleCodeSpec) -> RingMatrix:
    return RingMatrix(tuple(w.coordinates for w in spanning_set(code)), code.n)


def code_gray_matrix(code: DoubleCodeSpec, gray: Optional[GrayMatrix] = None) -> LinearCodeMatrix:
    """Gray image of the spanning set, 2(r+s) columns"""
    gray = gray or default_n(code.field)
    rows = component_rows(code)
    return phi_component_rows(rows["g"] + rows["lh"], gray, code.n, code.label)


def contains(code: DoubleCodeSpec, w: DoubleWord, gray: Optional[GrayMatrix] = None,
             matrix: Optional[LinearCodeMatrix] = None) -> bool:
    """Membership of w via its Gray image"""
    gray = gray or default_n(code.field)
    matrix = matrix if matrix is not None else code_gray_matrix(code, gray)
    return matrix.contains(phi_codes(w.coordinates, gray))


# -- bookkeeping --------------------------------------------------------------

def _gcd_degree(g: SkewPoly, l: SkewPoly) -> int:
    return right_gcd(g, l).degree


def structure_degrees(code: DoubleCodeSpec) -> Dict[str, int]:
    """k_e = deg g_e - deg gcd_r(g_e, l_e)"""
    out = {}
    for e in COMPONENTS:
        g, l, _ = code.component(e)
        out[e] = g.degree - _gcd_degree(g, l)
    return out


def cardinality(code: DoubleCodeSpec) -> Cardinality:
    """(|C|, |C_r|, |C_s|) as powers of q, read off the punctured generators"""
    left_gen, right_gen = punctured_generators(code)
    left = sum(code.r - f.degree for f in decompose(left_gen))
    right = sum(code.s - f.degree for f in decompose(right_gen))
    return Cardinality(code.field.q, code.expected_dimension, left, right)


def punctured_generators(code: DoubleCodeSpec) -> Tuple[SkewPoly, SkewPoly]:
    """Generators over R of the projections C_r and C_s"""
    gcd_v = right_gcd(code.g_v, code.l_v)
    gcd_vp = right_gcd(code.g_vp, code.l_vp)
    return compose(gcd_v, gcd_vp), compose(code.h_v, code.h_vp)


def module_condition_checks(code: DoubleCodeSpec) -> List[Check]:
    """
    g_e |_r ((x^s - 1)/h_e) * l_e for both components.

    The spanning set generates an R[x; theta]-submodule, so a T-shift closed
    code, exactly when both hold. Codes failing it are still built and
    measured; the checks are reported, not enforced.
    """
    xs = SkewPoly.x_n_minus_one(code.field, code.i, code.s)
    checks = []
    for e in COMPONENTS:
        g, l, h = code.component(e)
        u = right_divmod(xs, h).quot
        ok, rem = _divides(g, s_mul(u, l))
        checks.append(Check("g |_r ((x^s-1)/h)*l", ok,
                            "" if ok else f"remainder {format_poly(rem)}", e, binding=False))
    return checks


def module_condition_holds(code: DoubleCodeSpec) -> bool:
    return all(c.passed for c in module_condition_checks(code))


def divisibility_corollaries(code: DoubleCodeSpec, module: Optional[bool] = None) -> List[Check]:
    """
    g_e |_r u_e * gcd(g_e, l_e) and lcm(g_e, l_e) |_r u_e * l_e with
    u_e = (x^s - 1)/h_e, for both components.

    Both follow from the module condition, the first only when theta is
    the identity. Outside those cases they are reported, not enforced.
    """
    module = module_condition_holds(code) if module is None else module
    xs = SkewPoly.x_n_minus_one(code.field, code.i, code.s)
    checks = []
    for e in COMPONENTS:
        g, l, h = code.component(e)
        u = right_divmod(xs, h).quot
        ok, rem = _divides(g, s_mul(u, right_gcd(g, l)))
        checks.append(Check("g |_r ((x^s-1)/h)*gcd(g, l)", ok,
                            "" if ok else f"remainder {format_poly(rem)}", e,
                            binding=module and code.i == 0))
        if l.is_zero:
            checks.append(Check("lcm(g, l) |_r ((x^s-1)/h)*l", True, "l = 0", e))
            continue
        ok, rem = _divides(right_lcm(g, l), s_mul(u, l))
        checks.append(Check("lcm(g, l) |_r ((x^s-1)/h)*l", ok,
                            "" if ok else f"remainder {format_poly(rem)}", e, binding=module))
    return checks


def shift_closure_check(code: DoubleCodeSpec, gray: Optional[GrayMatrix] = None,
                        matrix: Optional[LinearCodeMatrix] = None,
                        binding: Optional[bool] = None) -> Check:
    """
    Every T-shifted spanning row stays in the Gray row space.

    Binding by default exactly when the module condition holds.
    """
    binding = module_condition_holds(code) if binding is None else binding
    gray = gray or default_n(code.field)
    matrix = matrix if matrix is not None else code_gray_matrix(code, gray)
    frob = code.field.frobenius_table(code.i)
    rows = component_rows(code)
    shifted = [(idx, _shift_codes(codes, code.r, frob)) for idx, codes in rows["g"] + rows["lh"]]
    image = phi_component_rows(shifted, gray, code.n)
    outside = [k for k in range(image.rows) if not matrix.contains(image.entries[k])]
    detail = "" if not outside else f"shifted rows {outside} leave the code"
    return Check("T-shift closure", not outside, detail, binding=binding)
