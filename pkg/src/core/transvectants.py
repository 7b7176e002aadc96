"""
Weighted differential functions, binary co-forms in (mu, eta) and the
omega process.
"""

from fractions import Fraction
from math import comb
from typing import Dict, Tuple

from src.core.errors import InvariantConstructionError, RankTooHigh
from src.core.gaussian import Number
from src.core.polynomial import MultiPoly


def falling_factorial(x: int, length: int) -> int:
    """x (x-1) ... (x-length+1); 1 for length 0."""
    result = 1
    for k in range(length):
        result *= x - k
    return result


class WeightedFunction:
    """A polynomial body times the prefactor u^u_exponent, with a weight.

    The body is a polynomial in jet variables or in the Q-symbols of
    ``ternary_forms``; only the fractional prefactor lives in u_exponent.

    Args:
        body: Polynomial part
        u_exponent: Exponent of the u prefactor
        weight: Weight under the linear action
    """

    __slots__ = ("body", "u_exponent", "weight")

    def __init__(self, body: MultiPoly, u_exponent: Fraction = Fraction(0), weight: int = 0) -> None:
        self.body = body
        self.u_exponent = Fraction(u_exponent)
        self.weight = weight

    def is_zero(self) -> bool:
        return self.body.is_zero()

    def _check_compatible(self, other: "WeightedFunction") -> None:
        if self.is_zero() or other.is_zero():
            return
        if self.u_exponent != other.u_exponent or self.weight != other.weight:
            raise InvariantConstructionError(
                f"cannot add u^{self.u_exponent} (weight {self.weight}) "
                f"to u^{other.u_exponent} (weight {other.weight})")

    def __add__(self, other: "WeightedFunction") -> "WeightedFunction":
        self._check_compatible(other)
        base = other if self.is_zero() else self
        return WeightedFunction(self.body + other.body, base.u_exponent, base.weight)

    def __neg__(self) -> "WeightedFunction":
        return WeightedFunction(-self.body, self.u_exponent, self.weight)

    def __sub__(self, other: "WeightedFunction") -> "WeightedFunction":
        return self + (-other)

    def __mul__(self, other) -> "WeightedFunction":
        if isinstance(other, WeightedFunction):
            return WeightedFunction(self.body * other.body, self.u_exponent + other.u_exponent,
                                    self.weight + other.weight)
        return WeightedFunction(self.body * other, self.u_exponent, self.weight)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "WeightedFunction":
        return WeightedFunction(self.body ** exponent, self.u_exponent * exponent, self.weight * exponent)

    def shifted(self, weight: int) -> "WeightedFunction":
        return WeightedFunction(self.body, self.u_exponent, self.weight + weight)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightedFunction):
            return NotImplemented
        return (self.body == other.body and self.u_exponent == other.u_exponent
                and self.weight == other.weight)

    def __hash__(self) -> int:
        return hash((self.body, self.u_exponent, self.weight))

    def __repr__(self) -> str:
        return f"WeightedFunction(u^({self.u_exponent}) * [{self.body}], weight={self.weight})"


class BinaryCoForm:
    """A form homogeneous in the dual variables (mu, eta).

    ``coefficients`` maps (degree in mu, degree in eta) to a weighted
    function; a co-form of degree 0 is a relative invariant.
    """

    def __init__(self, coefficients: Dict[Tuple[int, int], WeightedFunction], degree: int) -> None:
        for (a, b) in coefficients:
            if a + b != degree or a < 0 or b < 0:
                raise ValueError(f"monomial mu^{a} eta^{b} in a co-form of degree {degree}")
        self.degree = degree
        self.coefficients = {key: wf for key, wf in coefficients.items() if not wf.is_zero()}

    def coefficient(self, mu_degree: int) -> WeightedFunction:
        return self.coefficients.get((mu_degree, self.degree - mu_degree), _ZERO)

    def invariant(self) -> WeightedFunction:
        """The value of a degree-0 co-form."""
        if self.degree != 0:
            raise ValueError(f"co-form of degree {self.degree} is not an invariant")
        return self.coefficient(0)

    def derivative(self, mu_times: int, eta_times: int) -> "BinaryCoForm":
        result = {}
        for (a, b), wf in self.coefficients.items():
            if a >= mu_times and b >= eta_times:
                factor = falling_factorial(a, mu_times) * falling_factorial(b, eta_times)
                result[(a - mu_times, b - eta_times)] = wf * factor
        return BinaryCoForm(result, self.degree - mu_times - eta_times)

    def __mul__(self, other: "BinaryCoForm") -> "BinaryCoForm":
        result: Dict[Tuple[int, int], WeightedFunction] = {}
        for (a, b), x in self.coefficients.items():
            for (c, d), y in other.coefficients.items():
                key = (a + c, b + d)
                result[key] = result[key] + x * y if key in result else x * y
        return BinaryCoForm(result, self.degree + other.degree)

    def __pow__(self, exponent: int) -> "BinaryCoForm":
        result = self
        for _ in range(exponent - 1):
            result = result * self
        return result

    def scale(self, factor: Number) -> "BinaryCoForm":
        return BinaryCoForm({key: wf * factor for key, wf in self.coefficients.items()}, self.degree)

    def __add__(self, other: "BinaryCoForm") -> "BinaryCoForm":
        if other.degree != self.degree:
            raise ValueError("co-forms of different degrees")
        result = dict(self.coefficients)
        for key, wf in other.coefficients.items():
            result[key] = result[key] + wf if key in result else wf
        return BinaryCoForm(result, self.degree)

    def __repr__(self) -> str:
        return f"BinaryCoForm(degree={self.degree}, terms={len(self.coefficients)})"


_ZERO = WeightedFunction(MultiPoly.zero())


def transvectant(a: BinaryCoForm, b: BinaryCoForm, r: int) -> BinaryCoForm:
    """r-th transvectant by the omega process, without normalization.

    Applies (d/dmu1 d/deta2 - d/dmu2 d/deta1)^r to a(mu1, eta1) b(mu2, eta2)
    and sets mu1 = mu2, eta1 = eta2. The weight grows by r.

    Raises:
        RankTooHigh: If r exceeds the degree of either form
    """
    if r > min(a.degree, b.degree):
        raise RankTooHigh(f"transvectant order {r} exceeds degrees {a.degree}, {b.degree}")
    if r < 0:
        raise ValueError("transvectant order must be nonnegative")
    result = None
    for s in range(r + 1):
        term = a.derivative(r - s, s) * b.derivative(s, r - s)
        term = term.scale((-1) ** s * comb(r, s))
        result = term if result is None else result + term
    return BinaryCoForm({key: wf.shifted(r) for key, wf in result.coefficients.items()}, result.degree)

