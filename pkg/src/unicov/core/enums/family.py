from enum import auto

from unicov.core.compat import StrEnum


class FamilyTag(StrEnum):
    AP = auto()
    RANDOM = auto()
    QR = auto()
    INTERVAL = auto()
    SUBSPACE_UNION = auto()
    UNIVERSAL_SUMSET = auto()
    BOHR = auto()
