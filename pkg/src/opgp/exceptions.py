class OpgpError(Exception):
    """Base exception for all application-specific errors."""

    pass


# --- 1. Errors related to loading and parsing scenario files ---
class ConfigurationError(OpgpError):
    """Base class for errors encountered while finding, reading, or parsing scenario files."""

    pass


class ConfigFileMissingError(ConfigurationError):
    """Raised when a scenario file cannot be found."""

    pass


class ConfigParsingError(ConfigurationError):
    """Raised when a YAML scenario file is syntactically incorrect."""

    pass


class ConfigValidationError(ConfigurationError):
    """Raised when the scenario fails structural validation (e.g., Pydantic)."""

    pass


# --- 2. Errors related to the logical validity of a scenario ---
class DefinitionError(OpgpError):
    """Base class for errors in the names and references inside a scenario."""

    pass


class ReferenceNotFoundError(DefinitionError):
    """Raised when a stage refers to a matrix, kernel or model that is not declared before it."""

    pass


class StageTypeError(DefinitionError):
    """Raised when a stage input has the wrong kind, e.g. fitting on a matrix instead of a kernel."""

    pass


# --- 3. Errors in algebraic input ---
class AlgebraError(OpgpError):
    """Base class for malformed rings, operators and matrices."""

    pass


class RingMismatchError(AlgebraError):
    """Raised when two operands live in different rings."""

    pass


class DimensionMismatchError(AlgebraError):
    """Raised when matrix or vector shapes are not conformable."""

    pass


class OperatorSyntaxError(AlgebraError):
    """Raised when an operator expression cannot be parsed."""

    def __init__(self, message: str, text: str = "", position: int = -1):
        self.text = text
        self.position = position
        if position >= 0:
            message = f"{message} at position {position} in '{text}'"
        super().__init__(message)


class UnknownIdentifierError(OperatorSyntaxError):
    """Raised for a name that is not a generator of the declared ring."""

    pass


class UnsupportedPowerError(OperatorSyntaxError):
    """Raised for an exponent applied to a sum, e.g. (x+1)^2."""

    pass


class BoundaryGeneratorError(AlgebraError):
    """Raised when a boundary ideal generator contains a partial derivative."""

    pass


# --- 4. Errors during computation ---
class ComputationError(OpgpError):
    """Base class for failures inside an algorithm."""

    pass


class ResourceLimitError(ComputationError):
    """Raised when Buchberger exceeds the pair-reduction ceiling."""

    pass


class NullspaceConsistencyError(ComputationError):
    """Raised when an intersection violates B1*C1 == -B2*C2."""

    pass


class CholeskyError(ComputationError):
    """Raised when the jittered Gram matrix is not positive definite."""

    def __init__(self, message: str, smallest_eigenvalue: float):
        self.smallest_eigenvalue = smallest_eigenvalue
        super().__init__(f"{message} (smallest eigenvalue {smallest_eigenvalue:.3e})")


class NonFiniteError(ComputationError):
    """Raised when a numeric evaluation produces inf or nan."""

    pass


class UnknownVariableError(ComputationError):
    """Raised when differentiating with respect to a variable the expression does not have."""

    pass


class EmptyGridError(ComputationError):
    """Raised when a prediction grid has no points."""

    pass


# --- 5. Errors while rendering artifacts ---
class RenderError(OpgpError):
    """Base class for quiver rendering failures."""

    pass


class MalformedGridError(RenderError):
    """Raised when a grid CSV cannot be read."""

    pass


class UnsupportedDimensionError(RenderError):
    """Raised for grids that are neither 2- nor 3-dimensional."""

    pass


# --- 6. Check outcome ---
class CheckFailedError(OpgpError):
    """Raised when at least one check assertion of a scenario fails."""

    pass
