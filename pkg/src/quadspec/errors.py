"""Exception types raised by the solvers."""


class SolverError(Exception):
    """Base class for numerical failures (as opposed to bad arguments)."""


class ConvergenceError(SolverError):
    """Truncation doubling hit its cap before the eigenvalue stabilized."""

    def __init__(self, message, last_two=None):
        super().__init__(message)
        self.last_two = last_two


class BracketError(SolverError):
    """A sign-change scan exhausted its window without finding a root."""


class IntegrationError(SolverError):
    """The ODE integrator failed to reach the end of the interval."""
