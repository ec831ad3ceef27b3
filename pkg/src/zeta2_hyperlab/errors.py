"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class HyperlabError(Exception):
    pass


class PoleError(HyperlabError, ZeroDivisionError):
    """A gamma or Pochhammer factor hit a pole."""


class DomainError(HyperlabError, ValueError):
    pass


class ConvergenceError(HyperlabError, ArithmeticError):
    """Partial-fraction residues do not sum to zero, so the series diverges."""


class UnmappableError(HyperlabError, ValueError):
    """No trivial-symmetry assignment puts a 3F2 series into integral form."""


class RestrictionError(HyperlabError, ValueError):
    """A gamma ratio does not reduce to an exact Pochhammer product."""


class NotInOrbitError(HyperlabError, ValueError):
    pass


class DivergentSeries(HyperlabError, ArithmeticError):
    pass


class BudgetExceeded(HyperlabError, RuntimeError):
    """Raised when a work budget runs out; ``partial`` carries the best result so far."""

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class InadmissibleInstance(HyperlabError, ValueError):
    """An identity instance cannot be evaluated exactly; use the numeric verifier."""


class FormatError(HyperlabError, ValueError):
    pass
