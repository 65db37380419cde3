"""Exception types raised across the package."""

from __future__ import annotations


class BicirculantError(Exception):
    """Base class for every error raised by this package."""


# graph specifications

class InvalidSpec(BicirculantError, ValueError):
    pass


class NonSymmetricConnectionSet(InvalidSpec):
    pass


class ZeroInRT(InvalidSpec):
    pass


class DuplicateElement(InvalidSpec):
    pass


class OutOfRange(InvalidSpec):
    pass


# exact linear algebra and polynomials

class NotSquare(BicirculantError, ValueError):
    pass


class NotPalindromic(BicirculantError, ValueError):
    pass


class ZeroPolynomial(BicirculantError, ValueError):
    pass


class OddOrderForHalfClass(BicirculantError, ValueError):
    pass


class NonDivisible(BicirculantError, ArithmeticError):
    """An exact quotient that must divide did not. Indicates a bug."""


# certified numerics

class PrecisionExhausted(BicirculantError, ArithmeticError):
    pass


class RootOnUnitCircle(BicirculantError, ArithmeticError):
    pass


class ToleranceNotMet(BicirculantError, ArithmeticError):
    pass


# arithmetic structure

class NonPositive(BicirculantError, ValueError):
    pass


class NegativeConstant(BicirculantError, ArithmeticError):
    pass


class FalsificationError(BicirculantError, AssertionError):
    """A computed count contradicts the predicted square structure."""


class NotDivisible(FalsificationError):
    pass


class NotAPerfectSquare(FalsificationError):
    pass
