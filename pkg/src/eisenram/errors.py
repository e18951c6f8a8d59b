"""Exception hierarchy shared by every module.

Each exception carries a ``kind`` string; the CLI maps kinds to exit codes.
"""


class EisenramError(Exception):
    kind = "Error"


class InvalidInput(EisenramError):
    kind = "InvalidInput"


class ParseError(InvalidInput):
    kind = "ParseError"

    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class NotEisenstein(InvalidInput):
    kind = "NotEisenstein"

    def __init__(self, index, message=None):
        super().__init__(message or f"Eisenstein condition fails at coefficient {index}")
        self.index = index


class NotMonic(InvalidInput):
    kind = "NotMonic"


class DegreeMismatch(InvalidInput):
    kind = "DegreeMismatch"


class PrimeMismatch(InvalidInput):
    kind = "PrimeMismatch"


class MixedExtensions(InvalidInput):
    kind = "MixedExtensions"


class NonUnit(InvalidInput):
    kind = "NonUnit"


class BadUnitClass(InvalidInput):
    kind = "BadUnitClass"


class InsufficientPrecision(EisenramError):
    """A comparison or valuation could not be decided at the working precision."""

    kind = "InsufficientPrecision"

    def __init__(self, message="insufficient precision", bound=None):
        super().__init__(message)
        self.bound = bound


class DomainError(EisenramError):
    kind = "DomainError"


class NotGalois(DomainError):
    kind = "NotGalois"

    def __init__(self, root_count, degree=None):
        msg = f"extension is not Galois: {root_count} root(s) of the defining polynomial"
        if degree is not None:
            msg += f" in a degree-{degree} extension"
        super().__init__(msg)
        self.root_count = root_count


class NotConstructible(DomainError):
    kind = "NotConstructible"


class NonIntegerBreak(DomainError):
    kind = "NonIntegerBreak"


class UnsupportedMultipleRoot(DomainError):
    kind = "UnsupportedMultipleRoot"


class InconsistentResult(EisenramError):
    """Two computations that must agree did not; always a bug."""

    kind = "InconsistentResult"
