class ConstructionError(Exception):
    """Base exception for set family constructions."""


class FamilyParameterError(ConstructionError):
    """Raised when family parameters are out of range or inconsistent."""


class CertificationError(ConstructionError):
    """Raised when a constructed set cannot be certified within the retry budget."""
