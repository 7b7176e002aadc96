"""
Exception hierarchy for formsym.
"""

from src.utils.constants import (EXIT_DEGENERATE, EXIT_RESOURCE_LIMIT,
                                 EXIT_USAGE)


class FormSymError(Exception):
    """Base class for all library errors"""

    exit_code = EXIT_USAGE


# Parsing and algebra

class PolynomialSyntaxError(FormSymError):
    """Malformed polynomial text."""


class UnknownVariable(FormSymError):
    """A name that is not among the declared variables."""


class DivisionByZero(FormSymError, ZeroDivisionError):
    """Zero denominator in exact arithmetic."""

    exit_code = EXIT_DEGENERATE


class ZeroInput(FormSymError):
    """An operation that needs a nonzero polynomial received zero."""


class MissingAssignment(FormSymError):
    """Evaluation without a value for every variable."""


# Groebner engine

class ResourceLimit(FormSymError):
    """A configured Groebner cap was exceeded."""

    exit_code = EXIT_RESOURCE_LIMIT


class ImproperIdeal(FormSymError):
    """The ideal is the whole ring."""

    exit_code = EXIT_DEGENERATE


class NotZeroDimensional(FormSymError):
    """Ideal is not zero-dimensional, no finite basis."""

    exit_code = EXIT_DEGENERATE


# Binary forms

class HessianZero(FormSymError):
    """Hessian is zero: two-dimensional symmetry group."""

    exit_code = EXIT_DEGENERATE


class NotFinite(FormSymError):
    """The symmetry group is not discrete."""

    exit_code = EXIT_DEGENERATE


class GenericityFailure(FormSymError):
    """No probe point produced a stable count."""

    exit_code = EXIT_DEGENERATE


class NotLinearFractional(FormSymError):
    """A rational function that is not a Mobius map."""


class NotASymmetry(FormSymError):
    """A map that does not preserve the form up to a scalar."""


class NotExceptionalWeight(FormSymError):
    """The weight is not the exceptional value -n/2."""


# Ternary forms

class OutOfRange(FormSymError):
    """A Q-function index outside 0 <= k+l <= 4."""


class HessianDegenerate(FormSymError):
    """d2 vanishes identically on the form."""

    exit_code = EXIT_DEGENERATE


class RankTooHigh(FormSymError):
    """Transvectant order exceeds a co-form degree."""


class InvariantConstructionError(FormSymError):
    """u-exponents or weights failed to cancel in an absolute invariant."""


# Signatures

class NameMismatch(FormSymError):
    """Signature varieties over different invariant names."""
