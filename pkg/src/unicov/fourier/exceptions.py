class FourierError(Exception):
    """Base exception for Fourier layer errors."""


class ParameterRangeError(FourierError):
    """Raised when a threshold, radius or order is outside its range."""


class ComplexInputError(FourierError):
    """Raised when a real-valued function is required but a complex one is given."""


class ParsevalBoundError(FourierError):
    """Raised when a computed spectrum exceeds the Parseval cap."""
