"""Exception hierarchy.

Checkers return reports; exceptions are reserved for malformed input and
violated preconditions.
"""


class LyaError(Exception):
    """Base class for every error raised by this package."""


class FieldMismatchError(LyaError, TypeError):
    pass


class DimensionError(LyaError, ValueError):
    pass


class ManifestError(LyaError, ValueError):
    """Unparseable or schema-violating manifest input."""


class UnverifiedError(LyaError):
    """An operation needed a verified algebra/representation/action."""


class UnsupportedConfigurationError(LyaError):
    pass


class ContainmentError(LyaError):
    """A subspace was expected to contain another one."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class VerificationError(LyaError):
    """A structure failed the check that an operation depends on.

    ``report`` holds the failing check report (with witness).
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class IncompatibleRepresentationError(LyaError):
    """A coboundary output violated the consecutive-pair vanishing condition."""

    def __init__(self, message, witness=None, residual=None):
        super().__init__(message)
        self.witness = witness
        self.residual = residual


class CocycleError(LyaError):
    """Input expected to be a cocycle is not."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class ClosureError(LyaError):
    """The image of an equivariant cochain left the equivariant subspace."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
