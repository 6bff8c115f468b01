"""
Exception hierarchy for the root circle framework.

Every user-facing error is a ValueError so that pydantic validators and
the CLI treat them uniformly (the CLI maps any ValueError to exit code 2).
"""


class CircleError(ValueError):
    """Base class for all framework errors."""


class InvalidLieTypeError(CircleError):
    """Unknown family or a rank outside the family's bounds."""


class NotARootError(CircleError):
    """A coefficient vector that is not a root of the given root system."""


class ParabolicIndexError(CircleError):
    """Crossed simple-root index outside 1..rank."""


class NotOmittedError(CircleError):
    """A root that was required to be omitted from p but lies in p."""


class ModelSpecError(CircleError):
    """Malformed named model specification (`name:params`)."""


class AuditIndexError(CircleError):
    """Index parameters of an audited formula out of range."""


class SplittingError(CircleError):
    """Invalid splitting type or string representation data."""


class InvariantError(RuntimeError):
    """
    An internal invariant failed (root counts, string symmetry, partition).

    This never signals bad input; it means the enumeration or the string walker is wrong.
    """
