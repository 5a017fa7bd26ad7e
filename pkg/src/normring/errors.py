"""Exception hierarchy shared by every normring module."""


class NormringError(Exception):
    """Base class for all library errors."""


class RankDeficient(NormringError, ValueError):
    pass


class DimensionMismatch(NormringError, ValueError):
    pass


class NotPrime(NormringError, ValueError):
    pass


class NotMonic(NormringError, ValueError):
    pass


class Reducible(NormringError, ValueError):
    """The defining polynomial has a nontrivial factor; ``witness`` holds it."""

    def __init__(self, witness, message=None):
        self.witness = tuple(witness)
        super().__init__(message or f"polynomial is reducible, factor {list(self.witness)}")


class CannotCertify(NormringError, ValueError):
    pass


class NotUnital(NormringError, ValueError):
    pass


class NotClosed(NormringError, ValueError):
    """A lattice is not closed under the relevant multiplication."""

    def __init__(self, witness, message=None):
        self.witness = witness
        super().__init__(message or f"product {witness} escapes the lattice")


class ZeroIdeal(NormringError, ValueError):
    pass


class OrderMismatch(NormringError, ValueError):
    pass


class NotIntegral(NormringError, ValueError):
    pass


class NotContained(NormringError, ValueError):
    pass


class NotNormalization(NormringError, ValueError):
    pass


class FactorizationIncomplete(NormringError, ValueError):
    def __init__(self, cofactor):
        self.cofactor = cofactor
        super().__init__(f"could not certify the discriminant cofactor {cofactor}")


class DimTooSmall(NormringError, ValueError):
    pass


class NonCommutative(NormringError, ValueError):
    pass


class PreconditionViolated(NormringError, ValueError):
    pass


class ParseError(NormringError, ValueError):
    pass


class ValidationError(NormringError, ValueError):
    """A loaded document failed validation; ``field`` is a dotted path."""

    def __init__(self, field, reason):
        self.field = field
        self.reason = reason
        super().__init__(f"{field}: {reason}")
