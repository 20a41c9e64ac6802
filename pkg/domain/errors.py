"""
Domain Layer - Errors

Exception hierarchy shared by every layer. Validation problems in code
parameters are reported as data (ValidationReport); the classes here are
for faults and refusals.
"""
from typing import Optional


class DoubleSkewError(Exception):
    """Base class for all library errors"""


class FieldMismatchError(DoubleSkewError, ValueError):
    """Operands come from different fields, automorphisms or polynomial bases"""


class FieldConstructionError(DoubleSkewError, ValueError):
    """Field parameters do not describe GF(p^m) with a primitive generator"""


class ParseError(DoubleSkewError, ValueError):
    """Malformed element, polynomial, fixture or config text"""


class NonUnitError(DoubleSkewError, ZeroDivisionError):
    """Inversion or division by zero or by a zero divisor"""


class BudgetExceededError(DoubleSkewError):
    """Work would exceed the configured budget"""

    def __init__(self, what: str, required: int, budget: int):
        self.what = what
        self.required = required
        self.budget = budget
        super().__init__(
            f"{what} needs {required} operations, budget is {budget}"
        )


class TheoremPreconditionError(DoubleSkewError):
    """A closed-form generator formula hit an inexact right division"""

    def __init__(self, message: str, remainder: Optional[str] = None):
        self.remainder = remainder
        detail = f" (remainder {remainder})" if remainder else ""
        super().__init__(message + detail)


class StructuralError(DoubleSkewError):
    """Internal consistency failure between components"""


class InvalidCodeError(DoubleSkewError, ValueError):
    """Generator data violates the double skew cyclic code conditions"""

    def __init__(self, report):
        self.report = report
        super().__init__(
            "invalid double skew cyclic code: "
            + "; ".join(str(v) for v in report.violations)
        )


class InvalidGrayMatrixError(DoubleSkewError, ValueError):
    """Gray matrix N does not satisfy N N^T = eta I with eta != 0"""
