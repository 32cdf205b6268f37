"""Exception types shared across the package."""


class DunklError(Exception):
    """Base class for every error this package raises deliberately."""


class DimensionMismatch(DunklError):
    """Operands live in different ambient dimensions, or an axis is out of range."""


class InexactDivision(DunklError):
    """A polynomial division that must be exact left a remainder."""


class InvalidRootSystem(DunklError):
    """Root system data failed validation."""


class MathPrecondition(DunklError):
    """A mathematical hypothesis required by an operation does not hold."""
