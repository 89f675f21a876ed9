"""Exception taxonomy shared across the package.

DomainError covers malformed inputs and violated preconditions; RangeError
covers inputs that are well-formed but beyond the sizes this tool supports
(the 64-vertex graph cap, the enumeration-oracle vertex cap). The CLI maps
DomainError to exit code 1 and RangeError to exit code 2.
"""


class TuranForestError(Exception):
    """Base class for all package errors."""


class DomainError(TuranForestError):
    """Input is malformed or violates a documented precondition."""


class PreconditionError(DomainError):
    """A structural hypothesis of a formula or predicate does not hold."""


class RangeError(TuranForestError):
    """Input exceeds a hard size cap (graph order, oracle vertex count)."""


class CacheConflictError(TuranForestError):
    """A cache put would contradict an existing entry for the same key."""


class OracleBudgetError(TuranForestError):
    """An oracle run exhausted its node budget; the result is partial."""
