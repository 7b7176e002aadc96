"""
Reduced quotients of polynomials over Q(i).
"""

from fractions import Fraction
from typing import Mapping, Sequence, Tuple, Union

from src.core.errors import DivisionByZero
from src.core.gaussian import GaussianRational, Number
from src.core.polynomial import MultiPoly, exact_quotient, poly_gcd


def reduce_fraction(num: MultiPoly, den: MultiPoly) -> Tuple[MultiPoly, MultiPoly]:
    """Cancel the gcd and make the denominator's leading coefficient 1.

    Raises:
        DivisionByZero: If the denominator is zero
    """
    num, den = num._unified(den)
    if den.is_zero():
        raise DivisionByZero("rational function with zero denominator")
    if num.is_zero():
        return num, MultiPoly.one(num.variables)
    g = poly_gcd(num, den)
    if not g.is_constant():
        num, den = exact_quotient(num, g), exact_quotient(den, g)
    lead = den.leading_coefficient()
    if not lead.is_one():
        inverse = lead.inverse()
        num, den = num.scale(inverse), den.scale(inverse)
    return num, den


def reduce_power_fraction(num: MultiPoly, base: MultiPoly, power: int) -> Tuple[MultiPoly, MultiPoly]:
    """Reduce num / base**power one copy of base at a time.

    Avoids a gcd against the full power when base is large.
    """
    num, base = num._unified(base)
    if base.is_zero():
        raise DivisionByZero("rational function with zero denominator")
    den = MultiPoly.one(num.variables)
    remaining = power
    while remaining and not num.is_zero():
        g = poly_gcd(num, base)
        if g.is_constant():
            break
        num = exact_quotient(num, g)
        den = den * exact_quotient(base, g)
        remaining -= 1
    if remaining:
        den = den * base ** remaining
    if num.is_zero():
        return num, MultiPoly.one(num.variables)
    lead = den.leading_coefficient()
    inverse = lead.inverse()
    return num.scale(inverse), den.scale(inverse)


class RationalFunction:
    """A reduced fraction num/den with a monic (graded-lex) denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: Union[MultiPoly, None] = None,
                 reduced: bool = False) -> None:
        if den is None:
            den = MultiPoly.one(num.variables)
        if not reduced:
            num, den = reduce_fraction(num, den)
        else:
            num, den = num._unified(den)
        self.num = num
        self.den = den

    @staticmethod
    def from_power(num: MultiPoly, base: MultiPoly, power: int) -> "RationalFunction":
        n, d = reduce_power_fraction(num, base, power)
        return RationalFunction(n, d, reduced=True)

    @staticmethod
    def constant(value: Number, variables: Sequence[str] = ()) -> "RationalFunction":
        return RationalFunction(MultiPoly.constant(value, variables), reduced=True)

    @property
    def variables(self) -> Tuple[str, ...]:
        return self.num.variables

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def constant_value(self) -> GaussianRational:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num.constant_value() / self.den.constant_value()

    @staticmethod
    def _lift(value) -> "RationalFunction":
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, MultiPoly):
            return RationalFunction(value, reduced=True)
        if isinstance(value, (int, Fraction, GaussianRational)):
            return RationalFunction.constant(value)
        return NotImplemented

    def __add__(self, other) -> "RationalFunction":
        other = RationalFunction._lift(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den, reduced=True)

    def __sub__(self, other) -> "RationalFunction":
        other = RationalFunction._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "RationalFunction":
        return (-self) + other

    def __mul__(self, other) -> "RationalFunction":
        other = RationalFunction._lift(other)
        if other is NotImplemented:
            return other
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = RationalFunction._lift(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise DivisionByZero("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RationalFunction":
        return RationalFunction._lift(other) / self

    def __pow__(self, exponent: int) -> "RationalFunction":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return (1 / self) ** (-exponent)
        return RationalFunction(self.num ** exponent, self.den ** exponent, reduced=True)

    def evaluate(self, assignment: Mapping[str, Number]) -> GaussianRational:
        """Exact value at a point.

        Raises:
            DivisionByZero: If the denominator vanishes there
        """
        den = self.den.evaluate(assignment)
        if not den:
            raise DivisionByZero(f"denominator {self.den} vanishes at {dict(assignment)}")
        return self.num.evaluate(assignment) / den

    def derivative(self, v: str) -> "RationalFunction":
        return RationalFunction(self.num.derivative(v) * self.den - self.num * self.den.derivative(v),
                                self.den * self.den)

    def substitute(self, mapping) -> "RationalFunction":
        return RationalFunction(self.num.substitute(mapping), self.den.substitute(mapping))

    def __eq__(self, other) -> bool:
        other = RationalFunction._lift(other)
        if other is NotImplemented:
            return other
        return self.num * other.den == other.num * self.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RationalFunction({str(self)!r})"

    def __str__(self) -> str:
        if self.den.is_constant():
            return str(self.num / self.den.constant_value())
        return f"({self.num})/({self.den})"

    def to_json(self) -> dict:
        return {"numerator": self.num.to_json(), "denominator": self.den.to_json(),
                "text": str(self)}

    @staticmethod
    def from_json(data: dict) -> "RationalFunction":
        return RationalFunction(MultiPoly.from_json(data["numerator"]),
                                MultiPoly.from_json(data["denominator"]))
