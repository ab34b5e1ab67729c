"""
Exception hierarchy shared by every package of the lab.
"""


class DHTLabError(Exception):
    """Base class for all errors raised by the lab."""


class InvalidParameterError(DHTLabError, ValueError):
    """
    A parameter is outside its admissible range.

    Attributes:
        field (str): Name of the offending field
    """

    def __init__(self, field, message):
        super().__init__(f"{field}: {message}")
        self.field = field


class ConstraintError(DHTLabError, ValueError):
    """A family, branch or transform constraint is violated."""


class SingularityError(DHTLabError, ArithmeticError):
    """A denominator of the model vanishes."""


class DomainError(DHTLabError, ValueError):
    """
    Evaluation was requested outside the validity domain.

    Attributes:
        t (float): Time coordinate of the offending node
        x (float): Space coordinate of the offending node
    """

    def __init__(self, message, t=None, x=None):
        super().__init__(message)
        self.t = t
        self.x = x


class PoleError(DHTLabError, ArithmeticError):
    """A closed-form branch hits one of its poles."""


class IntegrationError(DHTLabError, RuntimeError):
    """
    Numerical integration of a reduced system failed.

    Attributes:
        last_point (float): Last independent-variable value reached
    """

    def __init__(self, message, last_point=None):
        if last_point is not None:
            message = f"{message} (last reached point {last_point:.12g})"
        super().__init__(message)
        self.last_point = last_point


class SolverError(DHTLabError, RuntimeError):
    """
    The finite-difference solver stopped.

    Attributes:
        t (float): Time at which the failure was detected
        x (float): Node position, when applicable
    """

    def __init__(self, message, t=None, x=None):
        super().__init__(message)
        self.t = t
        self.x = x
