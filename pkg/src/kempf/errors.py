"""Exception hierarchy shared by every module."""

from __future__ import annotations


class KempfError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(KempfError, ValueError):
    pass


class ShapeMismatch(KempfError, ValueError):
    pass


class NotInLieAlgebra(ShapeMismatch):
    """Matrix has entries outside the Lie algebra of the group descriptor."""


class ZeroCocharacter(KempfError, ValueError):
    pass


class NotSymmetric(KempfError, ValueError):
    pass


class NotPositiveDefinite(KempfError, ValueError):
    pass


class NotWeylInvariant(KempfError, ValueError):
    pass


class NotInLimitSet(KempfError, ValueError):
    """The limit of lambda(t).x as t -> 0 does not exist."""


class ZeroPoint(KempfError, ValueError):
    pass


class NotInvertible(KempfError, ValueError):
    pass


class NotNilpotent(KempfError, ValueError):
    pass


class NotInLevi(KempfError, ValueError):
    pass


class NotDiagonal(KempfError, ValueError):
    pass


class NotInJordanForm(KempfError, ValueError):
    """The element is not a coordinate direct sum of shift chains.

    Raised by checks that need a maximal torus of the centralizer inside the
    fixed diagonal torus.
    """


class NotInSubalgebra(KempfError, ValueError):
    pass


class MismatchError(KempfError, AssertionError):
    """An internal cross-check failed; indicates an implementation bug."""


class SemistableSignal(KempfError):
    """Raised where a destabilizing cocharacter is required but none exists.

    ``certificate`` carries the :class:`kempf.solver.Semistable` witness.
    """

    def __init__(self, message: str, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class ParseError(KempfError, ValueError):
    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}")
        self.path = path


class ValidationError(KempfError, ValueError):
    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}")
        self.path = path


class LimitExceeded(KempfError, ValueError):
    pass
