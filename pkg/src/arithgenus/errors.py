"""Exception hierarchy.  Each class maps onto one CLI exit status."""


class ArithGenusError(Exception):
    """Base class for all errors raised by the package."""

    exit_code = 1


class AmbientMismatchError(ArithGenusError, ValueError):
    """Operands live in polynomial rings with different variable counts."""


class PolynomialSyntaxError(ArithGenusError, ValueError):
    """Unparseable polynomial text; carries a 1-based line and column."""

    exit_code = 2

    def __init__(self, message: str, text: str = "", pos: int = 0, line_offset: int = 0):
        self.text = text
        self.pos = pos
        before = text[:pos]
        self.line = before.count("\n") + 1 + line_offset
        self.column = pos - (before.rfind("\n") + 1) + 1
        self.reason = message
        super().__init__(f"{message} at line {self.line}, column {self.column}")


class PreconditionError(ArithGenusError, ValueError):
    """Inputs violate the hypotheses of the requested construction."""

    exit_code = 3


class NonHomogeneousError(PreconditionError):
    pass


class ZeroQuotientError(PreconditionError):
    """The ideal defines the empty projective scheme."""


class VerificationMismatch(ArithGenusError):
    exit_code = 4


class ProjectionExhausted(ArithGenusError):
    """No random coordinate change produced a hypersurface image."""

    exit_code = 5

    def __init__(self, message: str, attempts=()):
        self.attempts = list(attempts)
        super().__init__(message)
