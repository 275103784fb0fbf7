"""Exception hierarchy shared by every subpackage."""


class PremodularError(Exception):
    """Base class for all errors raised by this package."""


class DivisionError(PremodularError, ArithmeticError):
    pass


class ArgumentError(PremodularError, ValueError):
    pass


class SymmetryError(PremodularError, ValueError):
    pass


class InternalError(PremodularError, RuntimeError):
    """An identity that must hold by construction failed."""


class UnsupportedError(PremodularError, NotImplementedError):
    pass


class EliminationError(PremodularError, RuntimeError):
    pass


class DomainError(PremodularError, ValueError):
    pass


class PoleError(PremodularError, ZeroDivisionError):
    pass


class ConvergenceError(PremodularError, RuntimeError):
    pass


class ConstructionError(PremodularError, RuntimeError):
    pass


class ConsistencyError(PremodularError, RuntimeError):
    pass


class UnresolvedRegion(PremodularError, RuntimeError):
    """A zero-search cell whose winding number and Newton result disagree."""

    def __init__(self, message, box=None, winding=None):
        super().__init__(message)
        self.box = box
        self.winding = winding
