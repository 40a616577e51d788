"""Exception hierarchy.

Errors fall in three families that callers (notably the command line front
end) treat differently:

* :class:`FieldPolicyError` -- a computation needed a number outside the
  Gaussian rationals Q(i) and was aborted rather than extended.
* :class:`TruncationError` -- the requested truncation order was too small to
  certify a discrete answer; re-running with a larger order may succeed.
* everything else -- invalid input or a violated precondition.
"""


class EquisingError(Exception):
    """Base class for all errors raised by this package."""


# -- algebra -----------------------------------------------------------------

class ZeroPolynomial(EquisingError, ValueError):
    pass


class OrderMismatch(EquisingError, ValueError):
    pass


class ZeroDivisor(EquisingError, ZeroDivisionError):
    pass


class ConstantInner(EquisingError, ValueError):
    pass


class OrderNotDivisible(EquisingError, ValueError):
    pass


# -- field policy --------------------------------------------------------------

class FieldPolicyError(EquisingError):
    """A value left Q(i).

    ``datum`` names the offending object (a polynomial, a coefficient) and
    ``degree`` is the degree of the field extension that would be needed,
    when known.
    """

    def __init__(self, message, datum=None, degree=None):
        super().__init__(message)
        self.datum = datum
        self.degree = degree


class IrrationalLeadingRoot(FieldPolicyError):
    pass


class UnrepresentableCoefficient(FieldPolicyError):
    pass


class IrrationalEigendirection(FieldPolicyError):
    pass


class NoMatchingUnit(FieldPolicyError):
    pass


# -- truncation ---------------------------------------------------------------

class TruncationError(EquisingError):
    pass


class TruncationTooCoarse(TruncationError):
    pass


class IndexExceedsTruncation(TruncationError):
    pass


# -- curves and foliations ------------------------------------------------------

class NotSquareFree(EquisingError, ValueError):
    pass


class DegenerateInput(EquisingError, ValueError):
    pass


class NotOnBranch(EquisingError, ValueError):
    pass


class ZeroForm(EquisingError, ValueError):
    pass


class RecurrenceObstruction(EquisingError, ArithmeticError):
    """A separatrix recurrence hit a zero pivot; indicates a bug."""


class DepthExceeded(EquisingError):
    """The blow-up driver hit its depth cap; ``partial`` holds the model."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class InsufficientFreePoints(EquisingError):
    pass
