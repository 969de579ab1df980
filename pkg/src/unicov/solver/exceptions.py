class SolverError(Exception):
    """Base exception for solver errors."""


class EmptySetError(SolverError):
    """Raised when an invariant is requested for an empty set."""


class InfeasibleCoverError(SolverError):
    """Raised when no family of translates can cover the target."""


class IndeterminateCoverError(SolverError):
    """Raised when the search budget runs out before optimality is certified."""


class OracleCapError(SolverError):
    """Raised when a brute-force oracle would exceed its work cap."""
