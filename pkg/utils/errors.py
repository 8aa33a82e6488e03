class CarpetError(Exception):
    """Base class for every error raised by the decider."""


class ComplexError(CarpetError, ValueError):
    """Invalid simplicial complex input."""


class UnknownVertexError(ComplexError, KeyError):
    """A vertex that is not in the complex was referenced."""

    def __init__(self, vertices):
        self.vertices = tuple(vertices)
        super().__init__(f"Unknown vertex: {', '.join(map(str, self.vertices))}")

    def __str__(self):
        return self.args[0]


class CoxeterMatrixError(CarpetError, ValueError):
    """Invalid Coxeter matrix."""


class RightAngledRequiredError(CarpetError, ValueError):
    """A right-angled system was required but labels other than 2 and inf were found."""


class PrecisionExhaustedError(CarpetError, ArithmeticError):
    """Interval refinement could not separate an eigenvalue from zero."""

    def __init__(self, message, precision=None):
        super().__init__(message)
        self.precision = precision


class DimensionGuardError(CarpetError):
    """The complex exceeds the supported dimension."""


class SizeGuardError(CarpetError):
    """The input is too large for an exhaustive procedure."""


class PlanarityDisagreementError(CarpetError):
    """Two planarity procedures produced different answers for the same complex."""


class SphereCompletionError(CarpetError):
    """A sphere completion could not be built or failed verification."""


class ConsistencyError(CarpetError):
    """An internal cross-check between two procedures failed."""


class SystemParseError(CarpetError, ValueError):
    """Syntax or semantic error in a Coxeter system document."""

    def __init__(self, message, line=None, column=None, token=None):
        self.message = message
        self.line = line
        self.column = column
        self.token = token
        location = f"line {line}, column {column}: " if line is not None else ""
        suffix = f" (at {token!r})" if token is not None else ""
        super().__init__(f"{location}{message}{suffix}")


class FamilyError(CarpetError, ValueError):
    """Unknown family or invalid family parameters."""


class ReportError(CarpetError, ValueError):
    """A report document could not be rendered or parsed."""
