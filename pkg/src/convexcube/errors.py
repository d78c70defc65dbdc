"""Exception hierarchy.

The CLI maps each family onto a distinct exit status, so raise the most
specific class that applies.
"""


class CubeError(Exception):
    """Base class for every error raised by the package."""

    exit_code = 1


class ConfigurationError(CubeError):
    """Bad constraint text, unbound atom, unsupported aggregate, bad flags."""

    exit_code = 2


class DomainError(CubeError, ValueError):
    """An argument lies outside the domain of the operation."""

    exit_code = 2


class ArityError(DomainError):
    """Tuples (or a tuple and a schema) disagree on the number of dimensions."""


class AntichainError(DomainError):
    """An input that must be an anti-chain contains comparable tuples."""


class DataError(CubeError):
    """Relation data violates a validation rule (measure, reserved label...)."""

    exit_code = 3


class BudgetExceeded(CubeError):
    """The multidimensional space holds more cells than the configured budget."""

    exit_code = 4
