"""Exception hierarchy shared by all modules."""


class MixRiemannError(Exception):
    """Base class for every error raised by this package."""


class DomainError(MixRiemannError, ValueError):
    """Argument outside the mathematical domain of a function."""


class PositivityError(DomainError):
    """A partial density is zero or negative (vacuum is not supported)."""


class ContractError(MixRiemannError, ValueError):
    """Caller violated a documented precondition."""


class DegenerateWaveError(MixRiemannError, ValueError):
    """A shock relation was requested for a zero-strength wave."""


class BracketError(MixRiemannError, RuntimeError):
    """No sign change of the pressure function could be bracketed."""


class SolverError(MixRiemannError, RuntimeError):
    """Root iteration did not converge.

    ``diagnostics`` carries the last bracket and residual.
    """

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = dict(diagnostics or {})


class ConfigError(MixRiemannError, ValueError):
    """Invalid configuration; ``violations`` lists every problem found."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))
