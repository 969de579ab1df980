from enum import auto

from unicov.core.compat import StrEnum


class CheckStatus(StrEnum):
    PASSED = auto()
    FAILED = auto()
    SKIPPED = auto()
    REPORTED = auto()


class CheckKind(StrEnum):
    ASSERTED = auto()
    REPORT_ONLY = auto()


class Relation(StrEnum):
    LE = "<="
    LT = "<"
    GE = ">="
    GT = ">"
    EQ = "="
