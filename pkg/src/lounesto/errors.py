"""Exception types raised by the library."""


class LounestoError(Exception):
    """Base class for all library errors."""


class SingularOperator(LounestoError, ArithmeticError):
    pass


class NonRealBilinear(LounestoError, ArithmeticError):
    """A bilinear covariant came out with a non-negligible imaginary part."""


class DivisionDegenerate(LounestoError, ArithmeticError):
    pass


class NotFlagpole(LounestoError, ValueError):
    pass


class NotWeyl(LounestoError, ValueError):
    pass


class ZeroDirection(LounestoError, ValueError):
    pass


class LabelMismatch(LounestoError, ValueError):
    pass


class OffShell(LounestoError, ValueError):
    pass


class NoConvergence(LounestoError, RuntimeError):
    pass


class WrongClass(NoConvergence):
    """Converged, but never onto a point of the requested Lounesto class."""


class DegenerateFreeParameters(LounestoError, ValueError):
    pass


class ExhaustedRetries(LounestoError, RuntimeError):
    pass
