"""Exception hierarchy shared by every module."""


class TmfFormsError(ValueError):
    """Base class for all input and consistency errors raised by tmf_forms."""


class ZeroConstantTerm(TmfFormsError):
    pass


class BadConstantTerm(TmfFormsError):
    pass


class NotPrime(TmfFormsError):
    pass


class DenominatorNotInvertible(TmfFormsError):
    def __init__(self, index, denominator, modulus):
        self.index = index
        self.denominator = denominator
        self.modulus = modulus
        super().__init__(
            f"coefficient {index} has denominator {denominator}, "
            f"not invertible mod {modulus}"
        )


class InsufficientPrecision(TmfFormsError):
    pass


class NotInRing(TmfFormsError):
    def __init__(self, message, index=None):
        self.index = index
        super().__init__(message)


class LatticeError(TmfFormsError):
    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class NotSymmetric(LatticeError):
    pass


class NotEven(LatticeError):
    pass


class NotUnimodular(LatticeError):
    pass


class NotPositiveDefinite(LatticeError):
    pass


class BudgetExceeded(TmfFormsError):
    pass


class DimensionNot24k(TmfFormsError):
    pass


class NonIntegralResidue(TmfFormsError):
    pass


class OddTermResidual(TmfFormsError):
    pass


class PairNotCongruent(TmfFormsError):
    pass


class MissingEntry(TmfFormsError):
    pass


class BadNormalization(TmfFormsError):
    pass


class NonConvergence(TmfFormsError):
    pass
