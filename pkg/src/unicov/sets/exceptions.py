class SetError(Exception):
    """Base exception for set operation errors."""


class GroupMismatchError(SetError):
    """Raised when operands live in different groups."""


class SetLiteralError(SetError):
    """Raised when a set literal cannot be parsed."""


class EmptyShiftError(SetError):
    """Raised when a shift intersection is taken over an empty shift set."""


class ArityError(SetError):
    """Raised when tuple arities or block shapes disagree."""


class ProfileCapError(SetError):
    """Raised when the intersection-profile table outgrows its cap."""


class EnumerationCapError(SetError):
    """Raised when a direct enumeration exceeds the enumeration cap."""


class PrimeFieldError(SetError):
    """Raised when a multiplicative operation is used outside Z/p."""
