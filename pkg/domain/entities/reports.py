"""
Domain Layer - Report Entities

Result documents returned by the use cases. Every report carries a status
from STATUS_EXIT_CODES and renders to a JSON-ready dict and to flat
records for CSV output.
"""
from dataclasses import dataclass, field as dataclass_field
from typing import Any, Dict, List, Optional, Tuple

from domain.entities.linear_code import DistanceResult

PASS = "pass"
CONTRADICTION = "contradiction"
BOUNDED = "bounded"
INVALID = "invalid"
ERROR = "error"
REFUSED = "refused"

STATUS_EXIT_CODES = {
    PASS: 0,
    BOUNDED: 0,
    CONTRADICTION: 1,
    INVALID: 2,
    ERROR: 2,
    REFUSED: 3,
}

# Worst status first; used when folding row statuses into one
_SEVERITY = (CONTRADICTION, REFUSED, INVALID, ERROR, BOUNDED, PASS)


def worst_status(statuses) -> str:
    statuses = set(statuses)
    for status in _SEVERITY:
        if status in statuses:
            return status
    return PASS


def _distance_dict(result: Optional[DistanceResult]) -> Optional[dict]:
    return result.to_dict() if result is not None else None


def _distance_text(result: Optional[DistanceResult]) -> str:
    return result.describe() if result is not None else "-"


@dataclass(frozen=True)
class Check:
    """One named property evaluated on a code"""
    name: str
    passed: bool
    detail: str = ""
    component: str = ""
    # Non-binding checks are reported but never change a status
    binding: bool = True

    def to_dict(self) -> dict:
        out = {"name": self.name, "passed": self.passed}
        if not self.binding:
            out["binding"] = False
        if self.component:
            out["component"] = self.component
        if self.detail:
            out["detail"] = self.detail
        return out

    def __str__(self) -> str:
        if self.passed:
            mark = "ok  "
        else:
            mark = "FAIL" if self.binding else "note"
        where = f" [{self.component}]" if self.component else ""
        detail = f": {self.detail}" if self.detail else ""
        return f"{mark} {self.name}{where}{detail}"


@dataclass(frozen=True)
class CodeParameters:
    """[n, k, d] triple; d may be None when unknown"""
    n: int
    k: int
    d: Optional[int] = None

    @classmethod
    def parse(cls, text: str) -> "CodeParameters":
        """Parse "[n, k, d]" or "[n,k]"; a trailing "*" on d is ignored"""
        body = text.strip().lstrip("[").rstrip("]").replace("*", "")
        parts = [p.strip() for p in body.split(",") if p.strip()]
        if len(parts) not in (2, 3):
            raise ValueError(f"expected [n, k, d], got {text!r}")
        n, k = int(parts[0]), int(parts[1])
        d = int(parts[2]) if len(parts) == 3 else None
        return cls(n, k, d)

    def improved_by(self, n: int, k: int, d: Optional[int]) -> bool:
        """Same length with larger d at equal k, or larger k at equal d"""
        if d is None or self.d is None or n != self.n:
            return False
        return (k == self.k and d > self.d) or (d == self.d and k > self.k)

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "d": self.d}

    def __str__(self) -> str:
        d = "-" if self.d is None else str(self.d)
        return f"[{self.n}, {self.k}, {d}]"


class Report:
    """Mixin giving every report an exit code and CSV records"""
    status: str

    @property
    def exit_code(self) -> int:
        return STATUS_EXIT_CODES[self.status]

    def to_dict(self) -> dict:
        raise NotImplementedError

    def to_records(self) -> List[Dict[str, Any]]:
        flat = {k: v for k, v in self.to_dict().items() if not isinstance(v, (dict, list))}
        return [flat]

    def to_text(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class ParametersReport(Report):
    label: str
    status: str
    field: str = ""
    code: Optional[dict] = None
    n: int = 0
    k: int = 0
    expected_dimension: int = 0
    distance: Optional[DistanceResult] = None
    cardinality: Optional[dict] = None
    structure_degrees: Optional[dict] = None
    checks: Tuple[Check, ...] = ()
    violations: Tuple[dict, ...] = ()
    expected: Optional[CodeParameters] = None
    reference: Optional[CodeParameters] = None
    improves_on_reference: Optional[bool] = None
    standard_form: Optional[List[List[str]]] = None
    matrix_path: Optional[str] = None
    message: str = ""

    def to_dict(self) -> dict:
        return {
            "command": "params",
            "label": self.label,
            "status": self.status,
            "field": self.field,
            "code": self.code,
            "n": self.n,
            "k": self.k,
            "d": _distance_text(self.distance),
            "expected_dimension": self.expected_dimension,
            "distance": _distance_dict(self.distance),
            "cardinality": self.cardinality,
            "structure_degrees": self.structure_degrees,
            "checks": [c.to_dict() for c in self.checks],
            "violations": list(self.violations),
            "expected": self.expected.to_dict() if self.expected else None,
            "reference": self.reference.to_dict() if self.reference else None,
            "improves_on_reference": self.improves_on_reference,
            "matrix_path": self.matrix_path,
            "message": self.message,
        }

    def to_text(self) -> str:
        lines = [f"{self.label or 'code'} over {self.field}: status {self.status}"]
        if self.message:
            lines.append(f"  {self.message}")
        for v in self.violations:
            lines.append(f"  violation: {v['condition']} [{v['component']}] remainder {v['remainder']}")
        if self.status != INVALID:
            lines.append(f"  parameters [{self.n}, {self.k}, {_distance_text(self.distance)}]")
            if self.distance is not None:
                lines.append(f"  distance work {self.distance.work} via {self.distance.method}")
            if self.cardinality:
                lines.append(f"  cardinality exponents {self.cardinality}")
            if self.structure_degrees:
                lines.append(f"  structure degrees {self.structure_degrees}")
        if self.expected is not None:
            lines.append(f"  expected {self.expected}")
        if self.reference is not None:
            lines.append(f"  reference {self.reference}: improved = {self.improves_on_reference}")
        lines.extend(f"  {c}" for c in self.checks)
        if self.standard_form:
            lines.append("  standard form:")
            lines.extend("    " + " ".join(row) for row in self.standard_form)
        if self.matrix_path:
            lines.append(f"  matrix written to {self.matrix_path}")
        return "\n".join(lines)


@dataclass(frozen=True)
class DualReport(Report):
    label: str
    status: str
    field: str = ""
    n: int = 0
    k: int = 0
    dual_k: int = 0
    generators: Optional[dict] = None
    closed_form: Optional[dict] = None
    cardinality: Optional[dict] = None
    checks: Tuple[Check, ...] = ()
    violations: Tuple[dict, ...] = ()
    matrix_path: Optional[str] = None
    message: str = ""

    def to_dict(self) -> dict:
        return {
            "command": "dual",
            "label": self.label,
            "status": self.status,
            "field": self.field,
            "n": self.n,
            "k": self.k,
            "dual_k": self.dual_k,
            "generators": self.generators,
            "closed_form": self.closed_form,
            "cardinality": self.cardinality,
            "checks": [c.to_dict() for c in self.checks],
            "violations": list(self.violations),
            "matrix_path": self.matrix_path,
            "message": self.message,
        }

    def to_text(self) -> str:
        lines = [f"dual of {self.label or 'code'} over {self.field}: status {self.status}"]
        if self.message:
            lines.append(f"  {self.message}")
        for v in self.violations:
            lines.append(f"  violation: {v['condition']} [{v['component']}] remainder {v['remainder']}")
        if self.status != INVALID:
            lines.append(f"  primal [{self.n}, {self.k}], dual [{self.n}, {self.dual_k}]")
        for name, value in (self.generators or {}).items():
            lines.append(f"  {name} = {value}")
        for name, value in (self.closed_form or {}).items():
            lines.append(f"  closed form {name} = {value}")
        lines.extend(f"  {c}" for c in self.checks)
        if self.matrix_path:
            lines.append(f"  parity matrix written to {self.matrix_path}")
        return "\n".join(lines)


@dataclass(frozen=True)
class ConstructionReport(Report):
    label: str
    status: str
    field: str = ""
    case: str = ""
    n: int = 0
    rows: int = 0
    k_before: int = 0
    k_after: int = 0
    d_before: Optional[DistanceResult] = None
    d_after: Optional[DistanceResult] = None
    checks: Tuple[Check, ...] = ()
    violations: Tuple[dict, ...] = ()
    reference: Optional[CodeParameters] = None
    improves_on_reference: Optional[bool] = None
    matrix_path: Optional[str] = None
    message: str = ""

    def to_dict(self) -> dict:
        return {
            "command": "construct",
            "label": self.label,
            "status": self.status,
            "field": self.field,
            "case": self.case,
            "n": self.n,
            "rows": self.rows,
            "k_before": self.k_before,
            "k_after": self.k_after,
            "d_before": _distance_text(self.d_before),
            "d_after": _distance_text(self.d_after),
            "distance_before": _distance_dict(self.d_before),
            "distance_after": _distance_dict(self.d_after),
            "checks": [c.to_dict() for c in self.checks],
            "violations": list(self.violations),
            "reference": self.reference.to_dict() if self.reference else None,
            "improves_on_reference": self.improves_on_reference,
            "matrix_path": self.matrix_path,
            "message": self.message,
        }

    def to_text(self) -> str:
        lines = [f"construction for {self.label or 'code'} over {self.field}: status {self.status}"]
        if self.message:
            lines.append(f"  {self.message}")
        for v in self.violations:
            lines.append(f"  violation: {v['condition']} [{v['component']}] remainder {v['remainder']}")
        if self.status != INVALID:
            lines.append(f"  case {self.case}, G' is {self.rows} x {self.n}")
            lines.append(f"  before [{self.n}, {self.k_before}, {_distance_text(self.d_before)}]")
            lines.append(f"  after  [{self.n}, {self.k_after}, {_distance_text(self.d_after)}]")
        if self.reference is not None:
            lines.append(f"  reference {self.reference}: improved = {self.improves_on_reference}")
        lines.extend(f"  {c}" for c in self.checks)
        if self.matrix_path:
            lines.append(f"  G' written to {self.matrix_path}")
        return "\n".join(lines)


@dataclass(frozen=True)
class TableRowReport:
    label: str
    status: str
    expected: CodeParameters
    n: int = 0
    k: int = 0
    distance: Optional[DistanceResult] = None
    path: str = ""
    reference: Optional[CodeParameters] = None
    improves_on_reference: Optional[bool] = None
    message: str = ""

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "status": self.status,
            "expected": str(self.expected),
            "n": self.n,
            "k": self.k,
            "d": _distance_text(self.distance),
            "lower": self.distance.lower if self.distance else None,
            "upper": self.distance.upper if self.distance else None,
            "work": self.distance.work if self.distance else 0,
            "path": self.path,
            "reference": str(self.reference) if self.reference else "",
            "improves_on_reference": self.improves_on_reference,
            "message": self.message,
        }


@dataclass(frozen=True)
class TableReport(Report):
    rows: Tuple[TableRowReport, ...]
    source: str = ""

    @property
    def status(self) -> str:
        return worst_status(row.status for row in self.rows)

    def to_dict(self) -> dict:
        return {
            "command": "table",
            "source": self.source,
            "status": self.status,
            "rows": [row.to_dict() for row in self.rows],
        }

    def to_records(self) -> List[Dict[str, Any]]:
        return [row.to_dict() for row in self.rows]

    def to_text(self) -> str:
        lines = [f"table {self.source}: status {self.status}"]
        for row in self.rows:
            computed = f"[{row.n}, {row.k}, {_distance_text(row.distance)}]"
            lines.append(
                f"  {row.label:<28} expected {str(row.expected):<16} computed {computed:<18} "
                f"{row.status:<13} {row.path}"
            )
            if row.message:
                lines.append(f"      {row.message}")
        return "\n".join(lines)


@dataclass(frozen=True)
class FixtureReport(Report):
    path: str
    status: str
    field: str = ""
    rows: int = 0
    cols: int = 0
    rank: int = 0
    expected_rank: Optional[int] = None
    distance: Optional[DistanceResult] = None
    expected_d: Optional[int] = None
    message: str = ""

    def to_dict(self) -> dict:
        return {
            "command": "verify-fixture",
            "path": self.path,
            "status": self.status,
            "field": self.field,
            "rows": self.rows,
            "cols": self.cols,
            "rank": self.rank,
            "expected_rank": self.expected_rank,
            "d": _distance_text(self.distance),
            "expected_d": self.expected_d,
            "distance": _distance_dict(self.distance),
            "message": self.message,
        }

    def to_text(self) -> str:
        lines = [f"fixture {self.path} over {self.field}: status {self.status}"]
        if self.message:
            lines.append(f"  {self.message}")
        lines.append(f"  {self.rows} x {self.cols}, rank {self.rank} (expected {self.expected_rank})")
        lines.append(f"  d = {_distance_text(self.distance)} (expected {self.expected_d})")
        return "\n".join(lines)


@dataclass(frozen=True)
class SearchRecord:
    """One evaluated candidate of a parameter search"""
    index: int
    code: dict
    n: int
    k: int
    distance: DistanceResult
    best_so_far: bool

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "n": self.n,
            "k": self.k,
            "d": _distance_text(self.distance),
            "lower": self.distance.lower if self.distance.upper is not None else None,
            "upper": self.distance.upper,
            "best_so_far": self.best_so_far,
            **{name: value for name, value in self.code.items() if name not in ("r", "s", "i")},
        }


@dataclass(frozen=True)
class SearchReport(Report):
    status: str
    field: str = ""
    records: Tuple[SearchRecord, ...] = ()
    candidates: int = 0
    message: str = ""

    @property
    def best(self) -> Optional[SearchRecord]:
        best = [rec for rec in self.records if rec.best_so_far]
        return best[-1] if best else None

    def to_dict(self) -> dict:
        return {
            "command": "search",
            "status": self.status,
            "field": self.field,
            "candidates": self.candidates,
            "records": [rec.to_dict() for rec in self.records],
            "best": self.best.to_dict() if self.best else None,
            "message": self.message,
        }

    def to_records(self) -> List[Dict[str, Any]]:
        return [rec.to_dict() for rec in self.records]

    def to_text(self) -> str:
        lines = [f"search over {self.field}: {self.candidates} candidates, status {self.status}"]
        if self.message:
            lines.append(f"  {self.message}")
        for rec in self.records:
            if rec.best_so_far:
                lines.append(f"  #{rec.index}: [{rec.n}, {rec.k}, {_distance_text(rec.distance)}] {rec.code}")
        return "\n".join(lines)


@dataclass(frozen=True)
class FactorizationCheck:
    label: str
    status: str
    field: str
    n: int
    left: str
    right: str
    product_matches: bool = False
    right_divides: bool = False
    quotient_matches: bool = False
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "status": self.status,
            "field": self.field,
            "n": self.n,
            "left": self.left,
            "right": self.right,
            "product_matches": self.product_matches,
            "right_divides": self.right_divides,
            "quotient_matches": self.quotient_matches,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class FactorizationReport(Report):
    checks: Tuple[FactorizationCheck, ...] = dataclass_field(default=())
    source: str = ""

    @property
    def status(self) -> str:
        # "inconsistent" lines are reported, not failed
        return worst_status(CONTRADICTION if c.status == "fail" else PASS for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "command": "factorizations",
            "source": self.source,
            "status": self.status,
            "checks": [c.to_dict() for c in self.checks],
        }

    def to_records(self) -> List[Dict[str, Any]]:
        return [c.to_dict() for c in self.checks]

    def to_text(self) -> str:
        lines = [f"factorizations {self.source}: status {self.status}"]
        for c in self.checks:
            lines.append(f"  {c.status:<12} {c.label}: x^{c.n} - 1 = ({c.left})({c.right})")
            if c.detail:
                lines.append(f"      {c.detail}")
        return "\n".join(lines)
