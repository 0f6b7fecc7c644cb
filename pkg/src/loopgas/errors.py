"""Exception hierarchy shared by all loopgas modules.

The CLI maps these onto distinct exit codes, so keep the hierarchy flat and
stable: DomainError (bad inputs / out-of-range parameters), IdentityError
(an exact identity that should hold failed to hold), TailBoundError
(requested numerical tolerance unreachable at the given truncation order).
"""


class LoopGasError(Exception):
    """Base class for all loopgas errors."""


class DomainError(LoopGasError, ValueError):
    """Input outside the mathematical domain of an operation."""


class BackendMismatchError(DomainError):
    """Two series with different coefficient backends were combined."""


class TailBoundError(LoopGasError, ArithmeticError):
    """Truncation tail exceeds the requested tolerance; increase the order."""


class IdentityError(LoopGasError, ArithmeticError):
    """An identity that must hold exactly (or to stated tolerance) failed."""


class DecompositionError(IdentityError):
    """Character decomposition left a nonzero remainder.

    The offending remainder series is attached as ``residual``.
    """

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class RegulatorFitError(IdentityError):
    """Smooth-cutoff regulator fit failed to converge to the stated tolerance."""
