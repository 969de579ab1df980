class VerifyError(Exception):
    """Base exception for harness errors."""


class UnknownCheckError(VerifyError):
    """Raised when a check id or suite name is not registered."""


class MalformedInstanceError(VerifyError):
    """Raised when an instance descriptor cannot be decoded."""


class PremiseNotMetError(VerifyError):
    """Raised by a check whose hypotheses fail on the given instance."""


class TableParameterError(VerifyError):
    """Raised when a table modulus is composite or above the prime cap."""
