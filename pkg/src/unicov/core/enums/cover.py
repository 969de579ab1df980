from enum import auto

from unicov.core.compat import StrEnum


class CoverStatus(StrEnum):
    OPTIMAL = auto()
    FEASIBLE = auto()
    INFEASIBLE = auto()
    INDETERMINATE = auto()
    NOT_FOUND = auto()
