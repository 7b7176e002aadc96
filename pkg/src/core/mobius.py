"""
Linear-fractional transformations p -> (alpha*p + beta)/(gamma*p + delta).
"""

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from src.core.errors import NotLinearFractional
from src.core.gaussian import GaussianRational
from src.core.polynomial import MultiPoly
from src.core.rational_function import RationalFunction
from src.utils.certified import AlgebraicCoefficient, ComplexBall
from src.utils.constants import BINARY_VARIABLE

Coefficient = Union[AlgebraicCoefficient, GaussianRational, int, Fraction]

_ONE = AlgebraicCoefficient(GaussianRational(1))


def _coefficient(value: Coefficient) -> AlgebraicCoefficient:
    if isinstance(value, AlgebraicCoefficient):
        return value
    if isinstance(value, ComplexBall):
        return AlgebraicCoefficient(value)
    return AlgebraicCoefficient(GaussianRational.coerce(value))


def _treat_as_zero(c: AlgebraicCoefficient) -> bool:
    return c.is_zero() if c.is_exact else c.value.contains_zero()


class Mobius:
    """A projective symmetry candidate with certified coefficients.

    Stores both the representative it was built from and the canonical
    scaling, whose first nonzero coefficient in (alpha, beta, gamma, delta)
    is 1.

    Args:
        alpha, beta, gamma, delta: Coefficients of the representative

    Raises:
        NotLinearFractional: If alpha*delta - beta*gamma may vanish
    """

    def __init__(self, alpha: Coefficient, beta: Coefficient,
                 gamma: Coefficient, delta: Coefficient) -> None:
        rep = tuple(_coefficient(c) for c in (alpha, beta, gamma, delta))
        det = rep[0] * rep[3] - rep[1] * rep[2]
        if _treat_as_zero(det):
            raise NotLinearFractional("degenerate transformation: alpha*delta - beta*gamma = 0")
        self.representative: Tuple[AlgebraicCoefficient, ...] = rep
        lead_index = next(k for k, c in enumerate(rep) if not _treat_as_zero(c))
        lead = rep[lead_index]
        if lead.is_exact and lead.value.is_one():
            canonical = rep
        else:
            canonical = tuple(_ONE if k == lead_index else (c if c.is_zero() else c / lead)
                              for k, c in enumerate(rep))
        self.alpha, self.beta, self.gamma, self.delta = canonical

    @property
    def coefficients(self) -> Tuple[AlgebraicCoefficient, ...]:
        return (self.alpha, self.beta, self.gamma, self.delta)

    @property
    def is_exact(self) -> bool:
        return all(c.is_exact for c in self.representative)

    def det(self) -> AlgebraicCoefficient:
        a, b, c, d = self.representative
        return a * d - b * c

    def compose(self, other: "Mobius") -> "Mobius":
        """self after other, as the matrix product of representatives."""
        a, b, c, d = self.representative
        e, f, g, h = other.representative
        return Mobius(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def inverse(self) -> "Mobius":
        a, b, c, d = self.representative
        return Mobius(d, -b, -c, a)

    def apply(self, z: Coefficient) -> Optional[AlgebraicCoefficient]:
        """Image of a point; None for the point at infinity."""
        z = _coefficient(z)
        a, b, c, d = self.representative
        den = c * z + d
        if _treat_as_zero(den):
            return None
        return (a * z + b) / den

    def is_identity(self) -> bool:
        return all(x.agrees_with(_coefficient(y)) for x, y in zip(self.coefficients, (1, 0, 0, 1)))

    def agrees_with(self, other: "Mobius") -> bool:
        """Same map: canonical coefficients equal (exact) or overlapping (certified)."""
        return all(x.agrees_with(y) for x, y in zip(self.coefficients, other.coefficients))

    def is_certified_real(self) -> bool:
        return all(c.is_certified_real() for c in self.coefficients)

    def to_rational_function(self, variable: str = BINARY_VARIABLE) -> RationalFunction:
        """The map as an exact rational function of ``variable``."""
        if not self.is_exact:
            raise ValueError("only exact transformations convert to rational functions")
        a, b, c, d = (x.exact for x in self.coefficients)
        p = MultiPoly.variable(variable)
        return RationalFunction(p * a + b, p * c + d)

    def sort_key(self) -> Tuple:
        parts = []
        for c in self.coefficients:
            z = c.to_complex()
            parts.extend([round(z.real, 12), round(z.imag, 12)])
        return (not self.is_identity(), not self.is_exact, tuple(parts))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mobius):
            return NotImplemented
        return self.agrees_with(other)

    __hash__ = None

    def __repr__(self) -> str:
        return f"Mobius({', '.join(str(c) for c in self.coefficients)})"

    def __str__(self) -> str:
        a, b, c, d = self.coefficients
        return f"({_linear(a, b)})/({_linear(c, d)})"

    def to_json(self) -> dict:
        return {
            "alpha": self.alpha.to_json(), "beta": self.beta.to_json(),
            "gamma": self.gamma.to_json(), "delta": self.delta.to_json(),
            "representative": [c.to_json() for c in self.representative],
            "text": str(self),
        }

    @staticmethod
    def from_json(data: dict) -> "Mobius":
        return Mobius(*(AlgebraicCoefficient.from_json(c) for c in data["representative"]))


def _linear(slope: AlgebraicCoefficient, constant: AlgebraicCoefficient) -> str:
    pieces = []
    if not slope.is_zero():
        pieces.append("p" if slope == 1 else f"{slope}*p")
    if not constant.is_zero() or not pieces:
        pieces.append(str(constant))
    return "+".join(pieces).replace("+-", "-")


def to_linear_fractional(r: RationalFunction) -> Mobius:
    """The Mobius map equal to a reduced rational function of one variable.

    Raises:
        NotLinearFractional: If numerator or denominator has degree above 1,
            or the map is constant
    """
    support = set(r.num.support()) | set(r.den.support())
    if len(support) > 1:
        raise NotLinearFractional(f"{r} is not a function of one variable")
    if not support:
        raise NotLinearFractional(f"{r} is constant")
    v = support.pop()
    num = r.num.univariate_coefficients(v)
    den = r.den.univariate_coefficients(v)
    if len(num) > 2 or len(den) > 2:
        raise NotLinearFractional(f"{r} has degree above 1")
    zero = GaussianRational(0)
    num = num + [zero] * (2 - len(num))
    den = den + [zero] * (2 - len(den))
    return Mobius(num[1], num[0], den[1], den[0])


def real_symmetries(symmetries: Sequence[Mobius]) -> List[Mobius]:
    """Maps whose canonical coefficients are certified real."""
    return [m for m in symmetries if m.is_certified_real()]
