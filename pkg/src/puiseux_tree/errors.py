"""Exception hierarchy shared by the arithmetic, geometry and tree layers."""


class PuiseuxError(ArithmeticError):
    """Base class for failures of exact Puiseux series arithmetic."""


class Indeterminate(PuiseuxError):
    """A quantity vanishes up to the known precision, so its sign or
    leading exponent cannot be decided."""


class NegativeInput(PuiseuxError, ValueError):
    pass


class NonRationalSqrt(PuiseuxError):
    """The leading coefficient is not the square of a rational number."""


class NonRealCrossRatio(PuiseuxError):
    """The cross-ratio came out non-real or below 1.

    This signals a convention or truncation bug and is never silently
    repaired.
    """


class SamePoint(ValueError):
    pass


class SameSeries(ValueError):
    pass


class OutOfRange(ValueError):
    pass
