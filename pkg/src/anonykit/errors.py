"""Exception hierarchy shared by every solver and by the CLI.

The CLI maps :class:`InfeasibleError` to exit code 2 and every other
:class:`AnonykitError` to exit code 1.
"""


class AnonykitError(Exception):
    pass


class InfeasibleError(AnonykitError):
    """Input admits no solution in which every group reaches k."""


class InfeasibleTotal(InfeasibleError):
    pass


class InfeasibleK(InfeasibleError):
    pass


class InvalidInstance(AnonykitError, ValueError):
    pass


class EmptyInstance(InvalidInstance):
    pass


class NonPositiveSize(InvalidInstance):
    pass


class BoundViolated(AnonykitError, ValueError):
    pass


class PreconditionViolated(AnonykitError, ValueError):
    pass


class EnumerationBudgetExceeded(AnonykitError):
    pass


class TooLarge(AnonykitError):
    pass


class Disconnected(InvalidInstance):
    pass


class InvalidSuppliedTree(InvalidInstance):
    pass


class ParseError(AnonykitError, ValueError):
    pass


class NonIntegralFrequency(ParseError):
    pass


class EmptyFile(ParseError):
    pass


class EmptyReport(AnonykitError, ValueError):
    pass


class DegenerateRange(UserWarning):
    """Sweep range collapsed to a single k value."""
