"""Exception types shared across the package."""


class LrcError(Exception):
    """Base class for domain errors raised by this package."""


class NotPrimePowerError(LrcError, ValueError):
    """The requested field size is not a prime power."""


class FieldRangeError(LrcError, ValueError):
    """The requested field size is outside the supported range."""


class BudgetExceededError(LrcError):
    """An enumeration or search would exceed the configured budget."""


class DegenerateCodeError(LrcError, ValueError):
    """An operation requires a non-degenerate code."""


class NoLocalityError(LrcError, ValueError):
    """Some coordinate is covered by no dual codeword, so locality is undefined."""


class InconsistentTableError(LrcError, ValueError):
    """A refined weight table fails an exactness check (non-integral division)."""


class PreconditionError(LrcError, ValueError):
    """An operation was invoked outside its stated domain."""
