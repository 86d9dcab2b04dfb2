"""Exception taxonomy shared by all modules.

CLI mapping: DomainError and ConfigurationError exit with status 2,
ResourceError with status 3.  InternalError signals a broken invariant
(a bug or an unsound truncation), never bad user input.
"""


class BranchkitError(Exception):
    """Base class for all errors raised by this package."""


class ConfigurationError(BranchkitError):
    """Unsupported form label or parameter out of range."""


class DomainError(BranchkitError):
    """Input violates a mathematical precondition (non-dominant, zero root, ...)."""


class DimensionError(BranchkitError):
    """Coordinate vectors of incompatible lengths."""


class ResourceError(BranchkitError):
    """A configured safety bound (group order, dimension) would be exceeded."""


class InternalError(BranchkitError):
    """An internal consistency check failed; indicates a bug, not bad input."""
