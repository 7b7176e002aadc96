"""
Exact Gaussian rationals: the coefficient field Q(i).
"""

from fractions import Fraction
from typing import Dict, Union

from src.core.errors import DivisionByZero

Number = Union[int, Fraction, "GaussianRational"]


class GaussianRational:
    """An element re + im*i of Q(i) with Fraction components.

    Instances are immutable. Components are always Fractions in lowest
    terms, so equal values have equal components and equal hashes.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: Union[int, Fraction, str] = 0,
                 im: Union[int, Fraction, str] = 0) -> None:
        object.__setattr__(self, "re", re if type(re) is Fraction else Fraction(re))
        object.__setattr__(self, "im", im if type(im) is Fraction else Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def coerce(value: Number) -> "GaussianRational":
        """Convert an int, Fraction or GaussianRational.

        Args:
            value: Value to convert

        Returns:
            The value as a GaussianRational
        """
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return GaussianRational(value)
        raise TypeError(f"cannot convert {type(value).__name__} to GaussianRational")

    # Predicates

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def is_one(self) -> bool:
        return self.re == 1 and not self.im

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    # Arithmetic

    def __add__(self, other: Number) -> "GaussianRational":
        if not isinstance(other, GaussianRational):
            if isinstance(other, (int, Fraction)):
                return GaussianRational(self.re + other, self.im)
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other: Number) -> "GaussianRational":
        if not isinstance(other, GaussianRational):
            if isinstance(other, (int, Fraction)):
                return GaussianRational(self.re - other, self.im)
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other: Number) -> "GaussianRational":
        return GaussianRational.coerce(other) - self

    def __mul__(self, other: Number) -> "GaussianRational":
        if not isinstance(other, GaussianRational):
            if isinstance(other, (int, Fraction)):
                return GaussianRational(self.re * other, self.im * other)
            return NotImplemented
        if not self.im and not other.im:
            return GaussianRational(self.re * other.re)
        return GaussianRational(self.re * other.re - self.im * other.im,
                                self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        """Multiplicative inverse.

        Raises:
            DivisionByZero: If the value is zero
        """
        if self.is_zero():
            raise DivisionByZero("division by zero in Q(i)")
        if not self.im:
            return GaussianRational(1 / self.re)
        norm = self.re * self.re + self.im * self.im
        return GaussianRational(self.re / norm, -self.im / norm)

    def __truediv__(self, other: Number) -> "GaussianRational":
        other = GaussianRational.coerce(other)
        if not other.im:
            if not other.re:
                raise DivisionByZero("division by zero in Q(i)")
            return GaussianRational(self.re / other.re, self.im / other.re)
        return self * other.inverse()

    def __rtruediv__(self, other: Number) -> "GaussianRational":
        return GaussianRational.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "GaussianRational":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """Field norm re^2 + im^2."""
        return self.re * self.re + self.im * self.im

    # Comparison and hashing

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.re == other and not self.im
        return NotImplemented

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    # Conversion

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))

    def to_json(self) -> Dict[str, str]:
        return {"re": str(self.re), "im": str(self.im)}

    @staticmethod
    def from_json(data: Dict[str, str]) -> "GaussianRational":
        return GaussianRational(Fraction(data["re"]), Fraction(data["im"]))

    def __repr__(self) -> str:
        return f"GaussianRational({self.re!s}, {self.im!s})"

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        if not self.re:
            return _imaginary_text(self.im)
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{_imaginary_text(abs(self.im))})"


def _imaginary_text(value: Fraction) -> str:
    if value == 1:
        return "i"
    if value == -1:
        return "-i"
    return f"{value}*i"


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)
