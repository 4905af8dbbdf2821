"""Error taxonomy.

Every mathematical failure mode raises a subclass of ComputationError and
carries a module-qualified ``code`` so the CLI can report it and exit 2.
Usage/config problems raise ConfigError instead (exit 1).
"""


class ComputationError(Exception):
    """A mathematically meaningful failure (exit code 2 in the CLI)."""

    code = "error"

    def __init__(self, message, **details):
        super().__init__(message)
        self.details = details


class TruncationAmbiguous(ComputationError):
    """A truncated jet is zero through its truncation order; the true order
    may lie beyond it, so the least part cannot be determined."""

    code = "core.TruncationAmbiguous"


class TruncationInsufficient(ComputationError):
    """An operation needs more terms than a truncated jet carries."""

    code = "core.TruncationInsufficient"


class SingularMatrix(ComputationError):
    code = "least.SingularMatrix"


class DependentGenerators(ComputationError):
    code = "least.DependentGenerators"


class CombinatorialBlowup(ComputationError):
    code = "wronskian.CombinatorialBlowup"


class NotDInvariant(ComputationError):
    code = "artin.NotDInvariant"


class DimensionMismatch(ComputationError):
    code = "artin.DimensionMismatch"


class NonRationalExpansion(ComputationError):
    """A series built-in was applied to an argument that does not vanish at
    the base point, so its Taylor coefficients would not be Gaussian
    rational."""

    code = "frontend.NonRationalExpansion"


class NotAnImmersion(ComputationError):
    """The Jacobian of a parametrisation has rank < n at the base point."""

    code = "frontend.NotAnImmersion"


class StabilityCheckFailed(ComputationError):
    """Dimensions or degrees changed when the truncation order was doubled."""

    code = "pushforward.StabilityCheckFailed"


class ParseError(ComputationError):
    """Syntax error in a parametrisation expression (carries line/column)."""

    code = "frontend.SyntaxError"

    def __init__(self, message, line=1, column=0):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class ConfigError(Exception):
    """Bad configuration or command usage (exit code 1 in the CLI)."""
