"""Exception types shared across the package."""


class AppellError(Exception):
    """Base class for all errors raised by this package."""


class OrderMismatch(AppellError, ValueError):
    pass


class ZeroScale(AppellError, ValueError):
    """A diagonal scaling D[l] was requested with l = 0."""


class SingularMatrix(AppellError, ZeroDivisionError):
    """Forward substitution hit a zero pivot.

    ``index`` is the first diagonal position that vanished.
    """

    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"matrix is singular: zero diagonal entry at index {index}")


class NotInvertible(SingularMatrix):
    """The transfer matrix of a family has c0 = 0 (e.g. Genocchi)."""

    def __init__(self, message="transfer matrix singular"):
        super().__init__(0, message)


class DomainError(AppellError, ValueError):
    pass


class IdentityViolation(AppellError, AssertionError):
    """An identity that must hold exactly was found to fail."""
