"""Shared exception types."""


class WeylcalcError(ValueError):
    """Base class for errors raised by this package."""


class DimensionMismatch(WeylcalcError):
    """Operands live on phase spaces of different dimension."""


class CapacityError(WeylcalcError):
    """A desk-scale capacity guard was exceeded."""
