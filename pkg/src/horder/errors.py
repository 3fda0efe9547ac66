"""Exception hierarchy shared by every module of the package."""


class HorderError(Exception):
    """Base class for all package errors."""


class DegreeError(HorderError, ValueError):
    pass


class ParameterDomainError(HorderError, ValueError):
    pass


class DimensionError(HorderError, ValueError):
    pass


class RootSolveError(HorderError, ArithmeticError):
    """Root iteration failed to converge; ``residual`` holds the best residual seen."""

    def __init__(self, message, residual=float("nan")):
        super().__init__(message)
        self.residual = residual


class NotHyperbolic(HorderError, ValueError):
    """A polynomial expected to be real-rooted has a non-real zero."""

    def __init__(self, message, root=None):
        super().__init__(message)
        self.root = root


class SingularVelocity(HorderError, ArithmeticError):
    pass


class LabelAmbiguity(HorderError, ArithmeticError):
    pass


class NotMajorized(HorderError, ValueError):
    pass


class NotDoublyStochastic(HorderError, ValueError):
    pass


class SolverStall(HorderError, ArithmeticError):
    pass


class InvalidContraction(HorderError, ValueError):
    pass


class MultipleRoots(HorderError, ValueError):
    pass


class StepCapExceeded(HorderError, ArithmeticError):
    pass


class UnknownSuite(HorderError, KeyError):
    pass
