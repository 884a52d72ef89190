"""Exception hierarchy shared by the library and the command line front end."""


class TorelliError(Exception):
    """Base class for every error raised by this package."""


class DimensionError(TorelliError, ValueError):
    """Objects living on surfaces of different genus were combined."""


class DomainError(TorelliError, ValueError):
    """An operation was applied outside its domain (e.g. bar of the zero class)."""


class InvariantError(TorelliError, ValueError):
    """Input data violates a structural invariant (symplectic basis, lantern sum, ...)."""


class MissingFactorizationError(TorelliError, ValueError):
    """An SIP item carries no factorization that the requested evaluator can use."""


class SchemaError(TorelliError, ValueError):
    """A JSON document does not follow the expected layout."""


class DerivationError(TorelliError):
    """Raised by helpers that want an exception instead of a failed report."""
