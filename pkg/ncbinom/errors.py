from __future__ import annotations


class FatalError(RuntimeError):
    pass


class DivisionNotExact(FatalError):
    pass


class EmptyWord(FatalError):
    pass


class NoFactorization(FatalError):
    pass


class OrderViolation(FatalError):
    pass


class UnsupportedRing(FatalError):
    pass


class RingMismatch(FatalError):
    pass


class AlphabetMismatch(FatalError):
    pass


class NotUnital(FatalError):
    pass


class NotASigmaDerivation(FatalError):
    pass


class TheoremViolation(FatalError):
    """An identity that must hold exactly came out different."""


class DegreeCapExceeded(FatalError):
    pass


class InvalidSpecError(FatalError):
    pass
