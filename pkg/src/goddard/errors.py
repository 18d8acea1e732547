"""Exception hierarchy."""


class GoddardError(Exception):
    """Base class for every error raised by this package."""


class ZeroDenominator(GoddardError, ZeroDivisionError):
    pass


class OrderMismatch(GoddardError, ValueError):
    """Two series with different truncation orders were combined."""


class NonzeroConstantTerm(GoddardError, ValueError):
    """Composition needs an inner series without constant term."""


class NonzeroLowOrder(GoddardError, ValueError):
    """Division by y**m is not exact: a coefficient below y**m is nonzero."""


class NegativePowerResidue(GoddardError, ValueError):
    """A closed form left a genuine negative power of y after expansion."""


class UsageError(GoddardError, ValueError):
    pass
