from unicov.core.compat import StrEnum


class Invariant(StrEnum):
    COV = "cov"
    UN = "un"
    U_N = "u_n"
    COV_MULT = "cov-mult"
    UN_MULT = "un-mult"
    EK = "ek"
    WIENER = "wiener"
    SPECTRUM = "spectrum"


class OutputFormat(StrEnum):
    JSON = "json"
    CSV = "csv"
    TEXT = "text"


class ComputeStatus(StrEnum):
    OPTIMAL = "optimal"
    EXACT = "exact"
    INFINITE = "infinite"
    INFEASIBLE = "infeasible"
    INDETERMINATE = "indeterminate"
