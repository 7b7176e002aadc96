"""
Certified complex numerics: midpoint-radius balls, certified roots and
algebraic coefficients that are either exact or certified.
"""

from fractions import Fraction
from logging import getLogger
from typing import List, Optional, Sequence, Union

import mpmath as mp

from src.core.errors import DivisionByZero
from src.core.gaussian import GaussianRational, Number
from src.core.polynomial import MultiPoly
from src.utils.constants import GUARD_BITS, LOGGER_NAME, MAX_DENOMINATOR

logger = getLogger(LOGGER_NAME + ".certified")


def _to_fraction(x) -> Fraction:
    man, exp = mp.mpf(x).man_exp
    return Fraction(man) * Fraction(2) ** exp if man else Fraction(0)


def _mpc(value: Number):
    value = GaussianRational.coerce(value)
    re = mp.mpf(value.re.numerator) / value.re.denominator
    im = mp.mpf(value.im.numerator) / value.im.denominator
    return mp.mpc(re, im)


def _slack(x) -> "mp.mpf":
    # one rounding error of the current working precision
    return abs(x) * mp.mpf(2) ** (1 - mp.mp.prec) + mp.mpf(2) ** (-4 * mp.mp.prec)


class ComplexBall:
    """A closed disk {z : |z - mid| <= radius} certified to contain a value.

    Arithmetic propagates radii so the result disk contains every result
    of the operation applied to points of the operand disks.
    """

    __slots__ = ("mid", "radius")

    def __init__(self, mid, radius=0) -> None:
        self.mid = mp.mpc(mid)
        self.radius = mp.mpf(radius)
        if self.radius < 0:
            raise ValueError("negative radius")

    @staticmethod
    def coerce(value) -> "ComplexBall":
        if isinstance(value, ComplexBall):
            return value
        if isinstance(value, (int, Fraction, GaussianRational)):
            value = GaussianRational.coerce(value)
            if value.is_zero():
                return ComplexBall(0)
            mid = _mpc(value)
            return ComplexBall(mid, _slack(mid))
        raise TypeError(f"cannot convert {type(value).__name__} to ComplexBall")

    def __add__(self, other) -> "ComplexBall":
        other = ComplexBall.coerce(other)
        mid = self.mid + other.mid
        return ComplexBall(mid, self.radius + other.radius + _slack(mid))

    __radd__ = __add__

    def __neg__(self) -> "ComplexBall":
        return ComplexBall(-self.mid, self.radius)

    def __sub__(self, other) -> "ComplexBall":
        return self + (-ComplexBall.coerce(other))

    def __rsub__(self, other) -> "ComplexBall":
        return ComplexBall.coerce(other) - self

    def __mul__(self, other) -> "ComplexBall":
        other = ComplexBall.coerce(other)
        mid = self.mid * other.mid
        radius = (abs(self.mid) * other.radius + abs(other.mid) * self.radius
                  + self.radius * other.radius + _slack(mid))
        return ComplexBall(mid, radius)

    __rmul__ = __mul__

    def inverse(self) -> "ComplexBall":
        """Reciprocal ball.

        Raises:
            DivisionByZero: If the ball contains zero
        """
        size = abs(self.mid)
        if size <= self.radius:
            raise DivisionByZero("ball contains zero")
        mid = 1 / self.mid
        return ComplexBall(mid, self.radius / (size * (size - self.radius)) + _slack(mid))

    def __truediv__(self, other) -> "ComplexBall":
        return self * ComplexBall.coerce(other).inverse()

    def __rtruediv__(self, other) -> "ComplexBall":
        return ComplexBall.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "ComplexBall":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ComplexBall(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> "ComplexBall":
        return ComplexBall(mp.conj(self.mid), self.radius)

    def contains(self, value) -> bool:
        if isinstance(value, ComplexBall):
            return abs(value.mid - self.mid) + value.radius <= self.radius
        return abs(_mpc(value) - self.mid) <= self.radius

    def overlaps(self, other: "ComplexBall") -> bool:
        return abs(self.mid - other.mid) <= self.radius + other.radius

    def contains_zero(self) -> bool:
        return abs(self.mid) <= self.radius

    def is_certified_real(self) -> bool:
        """True when the imaginary part can be zero."""
        return abs(self.mid.imag) <= self.radius

    def __repr__(self) -> str:
        return f"ComplexBall({mp.nstr(self.mid, 20)}, {mp.nstr(self.radius, 5)})"

    def to_json(self) -> dict:
        digits = max(20, int(mp.mp.prec * 0.30103) + 2)
        return {"re": mp.nstr(self.mid.real, digits), "im": mp.nstr(self.mid.imag, digits)}


def evaluate_ball(coeffs: Sequence[Number], z: ComplexBall) -> ComplexBall:
    """Horner evaluation of sum coeffs[k] z^k in ball arithmetic."""
    result = ComplexBall(0)
    for c in reversed(coeffs):
        result = result * z + ComplexBall.coerce(c)
    return result


def certified_roots(coeffs: Sequence[Number], precision_bits: int) -> List[ComplexBall]:
    """Isolating disks for all roots of a squarefree univariate polynomial.

    Each disk has center theta and radius d*|m(theta)/m'(theta)|, which holds
    a root of a degree-d polynomial m; disks are required to be pairwise
    disjoint, so each holds exactly one root.

    Args:
        coeffs: Coefficients [c0, ..., cd] over Q(i), squarefree polynomial
        precision_bits: Target radius is 2^-precision_bits

    Returns:
        One ball per root

    Raises:
        ArithmeticError: If isolation fails at every tried precision
    """
    degree = len(coeffs) - 1
    if degree < 1:
        return []
    derivative = [k * c for k, c in enumerate(coeffs)][1:]
    target = mp.mpf(2) ** (-precision_bits)
    extra = GUARD_BITS
    for attempt in range(4):
        with mp.workprec(precision_bits + extra):
            highest_first = [_mpc(c) for c in reversed(coeffs)]
            try:
                roots = mp.polyroots(highest_first, maxsteps=100 + 50 * degree,
                                     extraprec=precision_bits + extra)
            except mp.libmp.libhyper.NoConvergence:
                extra *= 2
                continue
            balls = []
            for theta in roots:
                theta = mp.mpc(theta)
                for _ in range(3):
                    d_value = mp.polyval([_mpc(c) for c in reversed(derivative)], theta)
                    if d_value == 0:
                        break
                    theta = theta - mp.polyval(highest_first, theta) / d_value
                value = evaluate_ball(coeffs, ComplexBall(theta))
                slope = evaluate_ball(derivative, ComplexBall(theta))
                if slope.contains_zero():
                    break
                radius = degree * (abs(value.mid) + value.radius) / (abs(slope.mid) - slope.radius)
                balls.append(ComplexBall(theta, radius * (1 + _slack(1)) + _slack(theta)))
            else:
                disjoint = all(not a.overlaps(b) for i, a in enumerate(balls) for b in balls[i + 1:])
                if disjoint and all(b.radius <= target for b in balls):
                    return balls
        logger.debug("root isolation retry with %d extra bits", 2 * extra)
        extra *= 2
    raise ArithmeticError("could not isolate the roots; is the polynomial squarefree?")


def rational_candidate(ball: ComplexBall) -> GaussianRational:
    """Nearest small-denominator Gaussian rational to the ball's midpoint."""
    re = _to_fraction(ball.mid.real).limit_denominator(MAX_DENOMINATOR)
    im = _to_fraction(ball.mid.imag).limit_denominator(MAX_DENOMINATOR)
    return GaussianRational(re, im)


class AlgebraicCoefficient:
    """A complex number known exactly in Q(i) or as a certified ball.

    Args:
        value: Exact value or enclosing ball
        annihilator: Univariate polynomial over Q(i) vanishing at the value
    """

    __slots__ = ("value", "annihilator")

    def __init__(self, value: Union[GaussianRational, ComplexBall, int, Fraction],
                 annihilator: Optional[MultiPoly] = None) -> None:
        if isinstance(value, (int, Fraction)):
            value = GaussianRational(value)
        self.value = value
        self.annihilator = annihilator

    @property
    def is_exact(self) -> bool:
        return isinstance(self.value, GaussianRational)

    @property
    def exact(self) -> GaussianRational:
        if not self.is_exact:
            raise ValueError("coefficient is not exact")
        return self.value

    def ball(self) -> ComplexBall:
        return ComplexBall.coerce(self.value)

    def to_complex(self) -> complex:
        if self.is_exact:
            return self.value.to_complex()
        return complex(self.value.mid)

    def is_zero(self) -> bool:
        """Certified zero: exact zero only."""
        return self.is_exact and self.value.is_zero()

    def may_be_zero(self) -> bool:
        return self.is_zero() if self.is_exact else self.value.contains_zero()

    def is_certified_real(self) -> bool:
        if self.is_exact:
            return self.value.is_real()
        return self.value.is_certified_real()

    def _combine(self, other, op) -> "AlgebraicCoefficient":
        if not isinstance(other, AlgebraicCoefficient):
            other = AlgebraicCoefficient(GaussianRational.coerce(other))
        if self.is_exact and other.is_exact:
            return AlgebraicCoefficient(op(self.value, other.value))
        return AlgebraicCoefficient(op(self.ball(), other.ball()))

    def __add__(self, other) -> "AlgebraicCoefficient":
        return self._combine(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other) -> "AlgebraicCoefficient":
        return self._combine(other, lambda a, b: a - b)

    def __rsub__(self, other) -> "AlgebraicCoefficient":
        return self._combine(other, lambda a, b: b - a)

    def __mul__(self, other) -> "AlgebraicCoefficient":
        return self._combine(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "AlgebraicCoefficient":
        return self._combine(other, lambda a, b: a / b)

    def __neg__(self) -> "AlgebraicCoefficient":
        return AlgebraicCoefficient(-self.value)

    def __pow__(self, exponent: int) -> "AlgebraicCoefficient":
        return AlgebraicCoefficient(self.value ** exponent)

    def conjugate(self) -> "AlgebraicCoefficient":
        return AlgebraicCoefficient(self.value.conjugate())

    def agrees_with(self, other: "AlgebraicCoefficient") -> bool:
        """Equal when both are exact, overlapping otherwise."""
        if self.is_exact and other.is_exact:
            return self.value == other.value
        return self.ball().overlaps(other.ball())

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.is_exact and self.value == other
        if not isinstance(other, AlgebraicCoefficient):
            return NotImplemented
        return self.is_exact and other.is_exact and self.value == other.value

    def __hash__(self) -> int:
        return hash(self.value) if self.is_exact else id(self)

    def __repr__(self) -> str:
        return f"AlgebraicCoefficient({self.value!r})"

    def __str__(self) -> str:
        if self.is_exact:
            return str(self.value)
        return mp.nstr(self.value.mid, 15)

    def to_json(self) -> dict:
        if self.is_exact:
            return {"kind": "exact", **self.value.to_json()}
        data = {"kind": "certified", "mid": self.value.to_json(),
                "radius": mp.nstr(self.value.radius, 10)}
        if self.annihilator is not None:
            data["minimal_polynomial"] = [c.to_json() for c in self.annihilator.univariate_coefficients()]
        return data

    @staticmethod
    def from_json(data: dict) -> "AlgebraicCoefficient":
        if data["kind"] == "exact":
            return AlgebraicCoefficient(GaussianRational.from_json(data))
        ball = ComplexBall(mp.mpc(mp.mpf(data["mid"]["re"]), mp.mpf(data["mid"]["im"])),
                           mp.mpf(data["radius"]))
        annihilator = None
        if "minimal_polynomial" in data:
            annihilator = MultiPoly.from_univariate(
                [GaussianRational.from_json(c) for c in data["minimal_polynomial"]], "z")
        return AlgebraicCoefficient(ball, annihilator)


def identify(ball: ComplexBall, annihilator: Optional[MultiPoly]) -> Optional[GaussianRational]:
    """Exact Q(i) value in the ball that is a root of the annihilator, if any."""
    if annihilator is None:
        return None
    candidate = rational_candidate(ball)
    if not ball.contains(candidate):
        return None
    coeffs = annihilator.univariate_coefficients()
    value = GaussianRational(0)
    for c in reversed(coeffs):
        value = value * candidate + c
    return candidate if value.is_zero() else None


def principal_root(value: AlgebraicCoefficient, n: int, precision_bits: int) -> AlgebraicCoefficient:
    """Principal n-th root, argument in (-pi/n, pi/n].

    Exact when a Q(i) candidate r satisfies r^n = value exactly; otherwise a
    certified ball annihilated by z^n - value when value is exact.
    """
    with mp.workprec(precision_bits + GUARD_BITS):
        ball = value.ball()
        if ball.contains_zero():
            raise DivisionByZero("n-th root of a value that may be zero")
        mid = ball.mid
        if mid.imag == 0 and mid.real < 0:
            # arg = pi for negative reals
            root_mid = mp.root(abs(mid.real), n) * mp.expjpi(mp.mpf(1) / n)
        else:
            root_mid = mp.root(mid, n)
        # |d root| <= |root| / (n |z|) |dz| near z
        radius = abs(root_mid) * ball.radius / (n * (abs(mid) - ball.radius)) + _slack(root_mid)
        root_ball = ComplexBall(root_mid, radius * 2)
        if value.is_exact:
            candidate = rational_candidate(root_ball)
            if candidate ** n == value.value:
                return AlgebraicCoefficient(candidate)
            exps = {(n,): 1, (0,): -value.value}
            return AlgebraicCoefficient(root_ball, MultiPoly(("z",), exps))
        return AlgebraicCoefficient(root_ball)
