"""Exception hierarchy shared by every hbim module."""


class HBIMError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(HBIMError, ValueError):
    """An argument lies outside the domain of the operation."""


class DegenerateTimeError(DomainError):
    """A field was requested at a time where it is not defined (t < 0)."""


class StageExceededError(DomainError):
    """The over-specified heat-up solution was queried past the heat-up time."""

    def __init__(self, message, heatup_time=None):
        super().__init__(message)
        self.heatup_time = heatup_time


class BracketError(HBIMError, ValueError):
    """The function does not change sign on the supplied bracket."""


class NoSolutionError(BracketError):
    """Two constraint curves do not cross on the exponent bracket."""


class NonConvergenceError(HBIMError, ArithmeticError):
    """An iterative method stopped before meeting its tolerance.

    ``estimate`` holds the best value available when the iteration gave up.
    """

    def __init__(self, message, estimate=None):
        super().__init__(message)
        self.estimate = estimate


class DivergenceError(NonConvergenceError):
    """An integration produced a non-finite state."""
