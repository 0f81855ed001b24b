"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class FuzzyLogicError(Exception):
    """Base class for all errors raised by fuzzytollens."""

    #: Stable machine-readable code, echoed in CLI diagnostics.
    code = "error"


class TruthRangeError(FuzzyLogicError, ValueError):
    code = "truth_range"


class InputError(FuzzyLogicError, ValueError):
    code = "input"


class TNormEvaluationError(FuzzyLogicError, ArithmeticError):
    """A custom t-norm produced a value outside [0, 1] (or a non-number)."""

    code = "tnorm_evaluation"

    def __init__(self, message: str, inputs: tuple[float, ...]):
        super().__init__(message)
        self.inputs = inputs


class LawViolationError(FuzzyLogicError):
    """A t-norm failed one of the axioms it is required to satisfy."""

    code = "law_violation"

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class UnsupportedAlgebraError(FuzzyLogicError, ValueError):
    code = "unsupported_algebra"


class FormulaSyntaxError(FuzzyLogicError, ValueError):
    code = "syntax"

    def __init__(self, message: str, line: int, column: int, expected: frozenset[str] = frozenset()):
        self.line = line
        self.column = column
        self.expected = expected
        detail = f"{message} at line {line}, column {column}"
        if expected:
            detail += "; expected one of: " + ", ".join(sorted(expected))
        super().__init__(detail)


class UnboundAtomError(FuzzyLogicError, KeyError):
    code = "unbound_atom"

    def __init__(self, name: str):
        super().__init__(name)
        self.name = name

    def __str__(self) -> str:
        return f"atom {self.name!r} has no assigned truth value"


class CapacityError(FuzzyLogicError, ValueError):
    code = "capacity"


class InconsistencyError(FuzzyLogicError):
    """Raised by helpers whose contract cannot express an inconsistent outcome.

    ``modus_tollens`` converts it into an inconsistent result; it only escapes
    from lower-level calls such as ``consequent_value``.
    """

    code = "inconsistent"

    def __init__(self, diagnostic_code: str, message: str, value: float | None = None):
        super().__init__(message)
        self.diagnostic_code = diagnostic_code
        self.value = value


class NumericError(FuzzyLogicError, ArithmeticError):
    """An internal cross-check failed; indicates a bug or a broken custom t-norm."""

    code = "numeric"
