"""Exception hierarchy for qunify."""


class QUnifyError(Exception):
    """Base class for all library errors."""


class DivisionByZero(QUnifyError, ZeroDivisionError):
    pass


class PoleAtPoint(QUnifyError, ZeroDivisionError):
    pass


class PoleAtOne(QUnifyError, ValueError):
    """The rational function has a genuine pole at q = 1."""


class ParseError(QUnifyError, ValueError):
    pass


class UnknownFamily(QUnifyError, LookupError):
    pass


class IndexBeyondTable(QUnifyError, IndexError):
    pass


class UnsolvableStep(QUnifyError):
    pass


class InconsistentInput(QUnifyError, ValueError):
    pass


class NotOfThisForm(QUnifyError):
    """The alpha ratio is not a polynomial in q**n with constant coefficients."""


class ZeroAlpha(QUnifyError, ValueError):
    pass


class NonUnitConstantTerm(QUnifyError, ZeroDivisionError):
    pass


class AlphaOneZero(NonUnitConstantTerm):
    """alpha(q, 1) = 0, so t / (E(t) - 1) has no power series expansion."""
