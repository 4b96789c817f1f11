"""Exception and warning types raised across the package."""


class NotHermitian(ValueError):
    pass


class NotUnitary(ValueError):
    pass


class NoConvergence(ArithmeticError):
    pass


class AccuracyLoss(ArithmeticError):
    """Integrator drifted off the set of density matrices (step too large)."""


class AlphaOutOfRange(ValueError):
    pass


class POutOfRange(ValueError):
    pass


class DegenerateRates(ValueError):
    pass


class InvalidRates(ValueError):
    pass


class ValidationError(ValueError):
    """A matrix violates a density-matrix invariant.

    ``invariant`` is one of ``"shape"``, ``"finite"``, ``"hermiticity"``,
    ``"trace"`` or ``"positivity"``.
    """

    def __init__(self, invariant, message):
        super().__init__(f"{invariant}: {message}")
        self.invariant = invariant


class ParseError(ValueError):
    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


class NonMonotoneWarning(RuntimeWarning):
    """Negativity (or CCNR score) re-crossed its threshold after the reported death time."""
