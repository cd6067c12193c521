"""Exception types raised by the evaluators."""


class DomainError(ValueError):
    """Argument outside the region where a representation is defined."""


class MagnitudeOverflowError(OverflowError):
    """An intermediate product left the double-precision range."""


class UnsupportedOrderError(ValueError):
    """Requested derivative order is above the supported maximum."""
