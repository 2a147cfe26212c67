"""Exception hierarchy shared by every module."""


class ConcentraError(Exception):
    """Base class for all errors raised by this package."""


class StructuralError(ConcentraError, ValueError):
    """Input is not well formed (index out of range, inconsistent sizes, ...).

    Distinct from an axiom failure: a structurally broken object cannot even
    be asked whether it satisfies the axioms.
    """


class ConcentrationError(ConcentraError):
    """A construction was requested on a partition that is not a concentration."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NotTwoLiftingError(ConcentraError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotPreservingError(ConcentraError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class SubcategoryError(StructuralError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NormalityError(ConcentraError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ActionError(ConcentraError):
    """A category or poset action violates functoriality, invertibility,
    compatibility or equivariance."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class SizeBoundError(ConcentraError):
    def __init__(self, message, size=None, bound=None):
        super().__init__(message)
        self.size = size
        self.bound = bound


class InternalConsistencyError(ConcentraError, AssertionError):
    """A result guaranteed by theory failed its re-verification (a bug)."""
