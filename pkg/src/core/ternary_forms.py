"""
Ternary forms: Q-functions, the co-forms P2-P4, relative invariants and the
eight absolute differential invariants restricted to a polynomial.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from logging import getLogger
from math import comb
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from src.core.errors import (HessianDegenerate, InvariantConstructionError,
                             OutOfRange, UnknownVariable, ZeroInput)
from src.core.polynomial import MultiPoly
from src.core.rational_function import RationalFunction
from src.core.transvectants import (BinaryCoForm, WeightedFunction,
                                    falling_factorial, transvectant)
from src.utils.constants import (INVARIANT_NAMES, LOGGER_NAME, MAX_JET_ORDER,
                                 TERNARY_VARIABLES)

logger = getLogger(LOGGER_NAME + ".ternary_forms")

JET_INDICES: Tuple[Tuple[int, int], ...] = tuple(
    (k, order - k) for order in range(MAX_JET_ORDER + 1) for k in range(order, -1, -1))
Q_INDICES: Tuple[Tuple[int, int], ...] = tuple((k, l) for k, l in JET_INDICES if k + l >= 2)


def jet_name(k: int, l: int) -> str:
    return "u" if k == l == 0 else f"u{k}{l}"


def q_name(k: int, l: int) -> str:
    return f"Q{k}{l}"


JET_VARIABLES: Tuple[str, ...] = tuple(jet_name(k, l) for k, l in JET_INDICES)
Q_VARIABLES: Tuple[str, ...] = tuple(q_name(k, l) for k, l in Q_INDICES)


def _jet(k: int, l: int) -> MultiPoly:
    return MultiPoly.variable(jet_name(k, l), JET_VARIABLES)


def _symbol(k: int, l: int) -> MultiPoly:
    return MultiPoly.variable(q_name(k, l), Q_VARIABLES)


def prefactor_exponent(order: int, n: int) -> Fraction:
    return Fraction(order * (1 - n), n)


class TernaryForm:
    """Inhomogeneous ternary form f(p, q) = F(p, q, 1) of degree n.

    Raises:
        ZeroInput: If f is zero
        ValueError: If n < 3, deg f > n or f uses other variables
    """

    def __init__(self, f: MultiPoly, degree: int) -> None:
        if f.is_zero():
            raise ZeroInput("ternary form must be nonzero")
        extra = set(f.support()) - set(TERNARY_VARIABLES)
        if extra:
            raise ValueError(f"ternary form uses variables other than p, q: {sorted(extra)}")
        if degree < 3:
            raise ValueError("ternary forms need degree n >= 3")
        self.f = f.embed(TERNARY_VARIABLES)
        if self.f.total_degree() > degree:
            raise ValueError(f"total degree {self.f.total_degree()} of {f} exceeds n={degree}")
        self.degree = degree
        self._jets: Dict[str, MultiPoly] = {}
        self._q_values: Dict[str, MultiPoly] = {}

    def jet_values(self) -> Dict[str, MultiPoly]:
        """u -> f and u_kl -> d^(k+l) f / dp^k dq^l."""
        if not self._jets:
            p, q = TERNARY_VARIABLES
            rows = [self.f]
            for _ in range(MAX_JET_ORDER):
                rows.append(rows[-1].derivative(p))
            for k, l in JET_INDICES:
                value = rows[k]
                for _ in range(l):
                    value = value.derivative(q)
                self._jets[jet_name(k, l)] = value
        return self._jets

    def q_values(self) -> Dict[str, MultiPoly]:
        """Bodies of every Q_kl restricted to the form."""
        if not self._q_values:
            jets = self.jet_values()
            for k, l in Q_INDICES:
                body = q_function(k, l, self.degree).body
                self._q_values[q_name(k, l)] = body.substitute(jets, TERNARY_VARIABLES)
        return self._q_values

    def __repr__(self) -> str:
        return f"TernaryForm({self.f}, n={self.degree})"


# Q-functions

def _pure(k: int, n: int, first: MultiPoly, jets: Callable[[int], MultiPoly]) -> MultiPoly:
    """Body of Q_k0 (or Q_0k) with the u^(j-1) factor folded in."""
    u = _jet(0, 0)
    body = MultiPoly.zero(JET_VARIABLES)
    for j in range(k + 1):
        coeff = (-1) ** (k - j) * comb(k, j) * falling_factorial(n - j, k - j)
        if coeff == 0:
            continue
        term = (first * Fraction(1, n)) ** (k - j) * coeff
        if j:
            term = term * u ** (j - 1) * jets(j)
        body = body + term
    return body


def _swap(body: MultiPoly) -> MultiPoly:
    return body.rename({jet_name(k, l): jet_name(l, k) for k, l in JET_INDICES}).embed(JET_VARIABLES)


def _mixed(k: int, l: int, n: int) -> MultiPoly:
    u = _jet(0, 0)
    u10, u01 = _jet(1, 0), _jet(0, 1)
    u20, u11, u02 = _jet(2, 0), _jet(1, 1), _jet(0, 2)
    a = Fraction(n - 1, n)
    b = Fraction(n - 2, n)
    c = Fraction(n - 3, n)
    if (k, l) == (1, 1):
        return u11 * u - u10 * u01 * a
    if (k, l) == (1, 2):
        return (_jet(1, 2) * u ** 2 - (u02 * u10 + u11 * u01 * 2) * u * b
                + u01 ** 2 * u10 * (2 * a * b))
    if (k, l) == (2, 1):
        return _swap(_mixed(1, 2, n))
    if (k, l) == (1, 3):
        return (_jet(1, 3) * u ** 3
                - (u10 * _jet(0, 3) + _jet(1, 2) * u01 * 3) * u ** 2 * c
                + (u01 ** 2 * u11 + u10 * u01 * u02) * u * (3 * c * b)
                - u01 ** 3 * u10 * (3 * a * b * c))
    if (k, l) == (3, 1):
        return _swap(_mixed(1, 3, n))
    if (k, l) == (2, 2):
        return (_jet(2, 2) * u ** 3
                - (_jet(2, 1) * u01 + _jet(1, 2) * u10) * u ** 2 * (2 * c)
                + (u10 ** 2 * u02 + u10 * u01 * u11 * 4 + u01 ** 2 * u20) * u * (c * b)
                - u10 ** 2 * u01 ** 2 * (3 * a * b * c))
    raise OutOfRange(f"Q_({k},{l})")


@lru_cache(maxsize=None)
def q_function(k: int, l: int, n: int) -> WeightedFunction:
    """Q_kl as u^((k+l)(1-n)/n) times a polynomial in the jet variables.

    Raises:
        OutOfRange: Unless 0 <= k, l and k + l <= 4
    """
    if k < 0 or l < 0 or k + l > MAX_JET_ORDER:
        raise OutOfRange(f"Q_({k},{l}) needs 0 <= k+l <= {MAX_JET_ORDER}")
    if l == 0:
        body = _pure(k, n, _jet(1, 0), lambda j: _jet(j, 0))
    elif k == 0:
        body = _pure(l, n, _jet(0, 1), lambda j: _jet(0, j))
    else:
        body = _mixed(k, l, n)
    return WeightedFunction(body, prefactor_exponent(k + l, n), 0)


def restrict(wf: WeightedFunction, form: TernaryForm) -> Tuple[RationalFunction, Fraction]:
    """Substitute the form's jets (and Q-function bodies) into a weighted function.

    Returns:
        The restricted body and the unresolved u-exponent
    """
    body = wf.body
    declared = set(body.variables)
    values: Dict[str, MultiPoly] = {}
    if declared & set(JET_VARIABLES):
        values.update(form.jet_values())
    if declared & set(Q_VARIABLES):
        values.update(form.q_values())
    unknown = declared - set(values)
    if unknown:
        raise UnknownVariable(f"cannot restrict variables {sorted(unknown)}")
    mapping = {v: values[v] for v in body.variables}
    restricted = body.substitute(mapping, TERNARY_VARIABLES)
    return RationalFunction(restricted), wf.u_exponent


# Co-forms and relative invariants

def _symbolic_co_form(k: int) -> BinaryCoForm:
    return BinaryCoForm({(k - j, j): WeightedFunction(_symbol(k - j, j) * comb(k, j))
                         for j in range(k + 1)}, k)


def co_form(k: int, n: int) -> BinaryCoForm:
    """P_k = sum_j C(k, j) Q_(k-j, j) mu^(k-j) eta^j over the Q-symbols."""
    if k not in (2, 3, 4):
        raise OutOfRange(f"co-form P_{k} is defined for k in 2, 3, 4")
    exponent = prefactor_exponent(k, n)
    base = _symbolic_co_form(k)
    return BinaryCoForm({key: WeightedFunction(wf.body, exponent, 0)
                         for key, wf in base.coefficients.items()}, k)


def _d2(P2, P3, P4):
    return transvectant(P2, P2, 2).scale(Fraction(1, 8))


def _h3(P3):
    return transvectant(P3, P3, 2)


def _h4(P4):
    return transvectant(P4, P4, 2)


def _d3(P2, P3, P4):
    H3 = _h3(P3)
    return transvectant(H3, H3, 2).scale(Fraction(-1, 10368))


def _i(P2, P3, P4):
    return transvectant(P4, P4, 4).scale(Fraction(1, 1152))


def _j(P2, P3, P4):
    return transvectant(_h4(P4), P4, 4).scale(Fraction(1, 497664))


def _m1(P2, P3, P4):
    return transvectant(_h3(P3), P2, 2).scale(Fraction(1, 288))


def _m2(P2, P3, P4):
    return transvectant(P3 ** 2, P2 ** 3, 6).scale(Fraction(1, 103680))


def _m3(P2, P3, P4):
    return transvectant(P4, P2 ** 2, 4).scale(Fraction(1, 576))


def _m4(P2, P3, P4):
    T4 = transvectant(_h4(P4), P4, 1)
    return transvectant(T4, P2 ** 3, 6).scale(Fraction(1, 1194393600))


def _m5(P2, P3, P4):
    S = transvectant(_h4(P4), P3 ** 2, 3)
    return transvectant(S, P4, 4).scale(Fraction(1, 238878720))


# name -> (weight, builder over P2, P3, P4)
RELATIVE_INVARIANTS: Dict[str, Tuple[int, Callable]] = {
    "d2": (2, _d2), "d3": (6, _d3), "i": (4, _i), "j": (6, _j),
    "M1": (4, _m1), "M2": (6, _m2), "M3": (4, _m3), "M4": (9, _m4), "M5": (9, _m5),
}

# I_k = numerator^power / D^den_power with D = -d2
ABSOLUTE_INVARIANTS: Dict[str, Tuple[str, int, int]] = {
    "I1": ("M1", 1, 2), "I2": ("M2", 1, 3), "I3": ("d3", 1, 3), "I4": ("i", 1, 2),
    "I5": ("j", 1, 3), "I6": ("M4", 2, 9), "I7": ("M3", 1, 2), "I8": ("M5", 2, 9),
}


@lru_cache(maxsize=None)
def _symbolic_invariant(name: str) -> WeightedFunction:
    weight, builder = RELATIVE_INVARIANTS[name]
    P2, P3, P4 = (_symbolic_co_form(k) for k in (2, 3, 4))
    value = builder(P2, P3, P4).invariant()
    if not value.is_zero() and value.weight != weight:
        raise InvariantConstructionError(f"{name} has weight {value.weight}, expected {weight}")
    return WeightedFunction(value.body.embed(Q_VARIABLES), Fraction(0), weight)


def _order(body: MultiPoly) -> int:
    """Common total order k+l of the Q-symbols in each monomial."""
    orders = set()
    for exp in body.terms:
        orders.add(sum(e * sum(Q_INDICES[idx]) for idx, e in enumerate(exp)))
    if len(orders) != 1:
        raise InvariantConstructionError(f"body mixes orders {sorted(orders)}")
    return orders.pop()


def relative_invariants(n: int, names: Optional[Iterable[str]] = None) -> Dict[str, WeightedFunction]:
    """d2, d3, i, j and M1-M5 as polynomials in the Q-symbols.

    Each carries its weight and the u-exponent (order)(1-n)/n of its terms.
    """
    result = {}
    for name in (names if names is not None else RELATIVE_INVARIANTS):
        if name not in RELATIVE_INVARIANTS:
            raise KeyError(f"unknown relative invariant {name}")
        symbolic = _symbolic_invariant(name)
        result[name] = WeightedFunction(symbolic.body, prefactor_exponent(_order(symbolic.body), n),
                                        symbolic.weight)
    return result


@dataclass
class TernaryInvariants:
    """Absolute invariants restricted to a form, keyed by name I1..I8."""

    values: Dict[str, RationalFunction] = field(default_factory=dict)

    def __getitem__(self, name: str) -> RationalFunction:
        return self.values[name]

    def __getattr__(self, name: str) -> RationalFunction:
        values = self.__dict__.get("values", {})
        if name in values:
            return values[name]
        raise AttributeError(name)

    @property
    def names(self) -> List[str]:
        return [name for name in INVARIANT_NAMES if name in self.values]

    def to_json(self) -> dict:
        return {name: self.values[name].to_json() for name in self.names}

    @staticmethod
    def from_json(data: dict) -> "TernaryInvariants":
        return TernaryInvariants({name: RationalFunction.from_json(v) for name, v in data.items()})


def absolute_invariants(form: TernaryForm, names: Sequence[str] = INVARIANT_NAMES) -> TernaryInvariants:
    """Reduced I_k = M^power / D^den_power restricted to the form, D = -d2.

    Raises:
        HessianDegenerate: If d2 vanishes identically on the form
        InvariantConstructionError: If weights or u-exponents fail to cancel
    """
    needed = {"d2"} | {ABSOLUTE_INVARIANTS[name][0] for name in names}
    relative = relative_invariants(form.degree, needed)
    d2 = relative["d2"]
    D, _ = restrict(d2, form)
    D = -D
    if D.is_zero():
        raise HessianDegenerate("d2 vanishes identically: the form reduces to a binary form")
    result = TernaryInvariants()
    for name in names:
        numerator_name, power, den_power = ABSOLUTE_INVARIANTS[name]
        numerator = relative[numerator_name]
        if numerator.weight * power != d2.weight * den_power:
            raise InvariantConstructionError(f"{name}: weights do not cancel")
        if numerator.u_exponent * power != d2.u_exponent * den_power:
            raise InvariantConstructionError(f"{name}: u-exponents do not cancel")
        value, _ = restrict(numerator, form)
        result.values[name] = RationalFunction.from_power(value.num ** power, D.num, den_power)
        logger.debug("%s = %s", name, result.values[name])
    return result
