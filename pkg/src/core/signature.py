"""
Signature varieties of differential invariants, equivalence tests and exact
symmetry counts.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from logging import getLogger
from typing import Dict, List, Optional, Sequence, Tuple

from typing_extensions import Literal

from src.core.binary_forms import BinaryForm, invariants_jk
from src.core.errors import (DivisionByZero, NameMismatch,
                             NotZeroDimensional, ResourceLimit)
from src.core.gaussian import Number
from src.core.groebner import (INFINITE, GroebnerBasis, GroebnerLimits, Ideal,
                               MonomialOrder, buchberger, eliminate)
from src.core.polynomial import MultiPoly, lcm
from src.core.rational_function import RationalFunction
from src.core.ternary_forms import TernaryForm, absolute_invariants
from src.core.zero_dimensional import (CertifiedPoint, radical_basis,
                                       solve_zero_dimensional)
from src.utils.constants import (BINARY_INVARIANT_NAMES, DEFAULT_PRECISION_BITS,
                                 LOGGER_NAME, SATURATION_VARIABLE,
                                 TERNARY_VARIABLES, THIRD_ORDER_NAMES)

logger = getLogger(LOGGER_NAME + ".signature")

Verdict = Literal["Equivalent", "Inequivalent", "Inconclusive"]


@dataclass
class SignatureVariety:
    """Smallest variety containing a signature manifold.

    ``generators`` is the reduced grevlex basis of the elimination ideal in
    the invariant variables; ``curve_dimension`` is 2 for ternary and 1 for
    binary forms.
    """

    invariant_names: Tuple[str, ...]
    generators: List[MultiPoly]
    dimension: int
    curve_dimension: int = 2

    @property
    def symmetry_group_dimension(self) -> int:
        return self.curve_dimension - self.dimension

    def basis(self) -> GroebnerBasis:
        return GroebnerBasis(self.generators, MonomialOrder.grevlex(), self.invariant_names)

    def to_json(self) -> dict:
        return {
            "invariant_names": list(self.invariant_names),
            "generators": [str(g.primitive()) for g in self.generators],
            "dimension": self.dimension,
            "symmetry_group_dimension": self.symmetry_group_dimension,
        }


@dataclass
class SymmetryCount:
    count: int
    probe_point: Tuple[Fraction, ...]
    radical_verified: bool
    diagnostics: List[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "count": self.count,
            "probe": [str(c) for c in self.probe_point],
            "radical_verified": self.radical_verified,
        }


def _curve_variables(invariants: Sequence[RationalFunction]) -> Tuple[str, ...]:
    names: List[str] = []
    for inv in invariants:
        names.extend(v for v in inv.num.support() + inv.den.support() if v not in names)
    return tuple(sorted(names))


def signature_ideal(invariants: Sequence[RationalFunction], names: Sequence[str],
                    limits: Optional[GroebnerLimits] = None) -> Ideal:
    """Elimination ideal of <N_j - I_j D_j, 1 - w lcm(D_j)> in the names.

    When every invariant is constant the result is the point ideal
    <I_j - c_j>.

    Raises:
        ValueError: If names and invariants differ in length
        ResourceLimit: If the elimination exceeds a cap
    """
    if len(names) != len(invariants):
        raise ValueError("one name per invariant required")
    curve = _curve_variables(invariants)
    names = tuple(names)
    if not curve:
        point = [MultiPoly.variable(name, names) - inv.constant_value()
                 for name, inv in zip(names, invariants)]
        logger.info("all invariants constant: signature is a point")
        return Ideal(point, names)
    variables = (SATURATION_VARIABLE,) + curve + names
    equations = []
    for name, inv in zip(names, invariants):
        num, den = inv.num.embed(variables), inv.den.embed(variables)
        equations.append(num - MultiPoly.variable(name, variables) * den)
    denominator = lcm([inv.den.embed(variables) for inv in invariants])
    equations.append(MultiPoly.one(variables) - MultiPoly.variable(SATURATION_VARIABLE, variables) * denominator)
    logger.debug("signature system: %s", ", ".join(str(e) for e in equations))
    return eliminate(Ideal(equations, variables), (SATURATION_VARIABLE,) + curve, limits)


def signature_dimension(ideal: Ideal, limits: Optional[GroebnerLimits] = None) -> int:
    """Dimension of the variety of a proper ideal.

    Raises:
        ImproperIdeal: If the ideal is the whole ring
    """
    return buchberger(ideal, MonomialOrder.grevlex(), limits).variety_dimension()


def signature_variety(invariants: Sequence[RationalFunction], names: Sequence[str],
                      curve_dimension: int = 2,
                      limits: Optional[GroebnerLimits] = None) -> SignatureVariety:
    ideal = signature_ideal(invariants, names, limits)
    gb = buchberger(ideal, MonomialOrder.grevlex(), limits)
    variety = SignatureVariety(tuple(names), list(gb.basis), gb.variety_dimension(), curve_dimension)
    logger.info("signature variety of dimension %d with %d generators",
                variety.dimension, len(variety.generators))
    return variety


def ternary_signature(form: TernaryForm, names: Sequence[str] = THIRD_ORDER_NAMES,
                      limits: Optional[GroebnerLimits] = None) -> SignatureVariety:
    invariants = absolute_invariants(form, names)
    return signature_variety([invariants[name] for name in names], names, 2, limits)


def binary_signature(form: BinaryForm, limits: Optional[GroebnerLimits] = None) -> SignatureVariety:
    """Signature variety of the pair (J, K) in the single variable p.

    Raises:
        HessianZero: If the Hessian vanishes identically
    """
    pair = invariants_jk(form)
    return signature_variety([pair.J, pair.K], BINARY_INVARIANT_NAMES, 1, limits)


# Counting

def _probe_ideal(invariants: Sequence[RationalFunction], probe: Sequence[Number]) -> Ideal:
    """<N_j - c_j D_j, 1 - w lcm(D_j)> with c_j the invariants at the probe."""
    curve = TERNARY_VARIABLES[:len(probe)]
    assignment = dict(zip(curve, probe))
    variables = curve + (SATURATION_VARIABLE,)
    equations = []
    for inv in invariants:
        if inv.is_constant():
            continue
        value = inv.evaluate(assignment)
        equations.append(inv.num.embed(variables) - inv.den.embed(variables) * value)
    denominator = lcm([inv.den.embed(variables) for inv in invariants])
    equations.append(MultiPoly.one(variables) - MultiPoly.variable(SATURATION_VARIABLE, variables) * denominator)
    return Ideal(equations, variables)


def _probe_basis(invariants: Sequence[RationalFunction], probe: Sequence[Number],
                 limits: Optional[GroebnerLimits]) -> Tuple[GroebnerBasis, bool, List[str]]:
    """Radical basis at the probe, or the plain basis when the radical is out of reach."""
    label = tuple(map(str, probe))
    gb = buchberger(_probe_ideal(invariants, probe), MonomialOrder.grevlex(), limits)
    if gb.quotient_dimension() == INFINITE:
        raise NotZeroDimensional(f"ideal at probe {label} is not zero-dimensional")
    if gb.is_radical_zero_dim():
        return gb, True, []
    logger.warning("ideal at probe %s is not radical; counting distinct points", label)
    try:
        return radical_basis(gb, limits), True, [f"probe {label}: multiplicities removed"]
    except ResourceLimit as exc:
        logger.warning("radical at probe %s out of reach: %s", label, exc)
        return gb, False, [f"probe {label}: count is an upper bound ({exc})"]


def symmetry_count(invariants: Sequence[RationalFunction], probe: Sequence[Number],
                   limits: Optional[GroebnerLimits] = None) -> SymmetryCount:
    """Number of points with the same invariant values as the probe.

    Raises:
        DivisionByZero: If a denominator vanishes at the probe
        NotZeroDimensional: If the probe is not generic
    """
    probe = tuple(Fraction(c) for c in probe)
    gb, verified, notes = _probe_basis(invariants, probe, limits)
    count = int(gb.quotient_dimension())
    logger.info("probe %s: %d symmetries", tuple(map(str, probe)), count)
    return SymmetryCount(count, probe, verified, notes)


def count_symmetries(invariants: Sequence[RationalFunction], probes: Sequence[Sequence[Number]],
                     limits: Optional[GroebnerLimits] = None) -> SymmetryCount:
    """symmetry_count at the first probe that is usable.

    Raises:
        NotZeroDimensional: If every probe fails
    """
    diagnostics = []
    for probe in probes:
        try:
            result = symmetry_count(invariants, probe, limits)
        except DivisionByZero as exc:
            message = f"probe {tuple(map(str, probe))}: division by zero ({exc})"
        except NotZeroDimensional as exc:
            message = f"probe {tuple(map(str, probe))}: {exc}"
        except ResourceLimit as exc:
            message = f"probe {tuple(map(str, probe))}: {exc}"
        else:
            result.diagnostics = diagnostics + result.diagnostics
            return result
        logger.warning(message)
        diagnostics.append(message)
    raise NotZeroDimensional("; ".join(diagnostics) or "no probes given")


def probe_images(invariants: Sequence[RationalFunction], probe: Sequence[Number],
                 precision_bits: int = DEFAULT_PRECISION_BITS,
                 limits: Optional[GroebnerLimits] = None) -> List[CertifiedPoint]:
    """Images of the probe point under all symmetries, certified."""
    probe = tuple(Fraction(c) for c in probe)
    gb, _, _ = _probe_basis(invariants, probe, limits)
    return solve_zero_dimensional(gb, precision_bits, TERNARY_VARIABLES[:len(probe)], limits)


# Equivalence

def equivalence_test(a: SignatureVariety, b: SignatureVariety, mode: str = "complex") -> Verdict:
    """Compare signature varieties over the same invariant names.

    Raises:
        NameMismatch: If the invariant names differ
    """
    if tuple(a.invariant_names) != tuple(b.invariant_names):
        raise NameMismatch(f"{list(a.invariant_names)} vs {list(b.invariant_names)}")
    gb_a, gb_b = a.basis(), b.basis()
    same = (a.dimension == b.dimension
            and all(gb_b.contains(g) for g in a.generators)
            and all(gb_a.contains(g) for g in b.generators))
    if not same:
        return "Inequivalent"
    return "Equivalent" if mode == "complex" else "Inconclusive"


# Sum of powers p^n + q^n + 1

SUM_OF_POWERS_VARIABLES = ("P", "Q")


def _in_powers(poly: MultiPoly, n: int) -> MultiPoly:
    """Rewrite a polynomial in p^n, q^n as one in P, Q."""
    poly = poly.embed(TERNARY_VARIABLES)
    terms = {}
    for (a, b), c in poly.terms.items():
        if a % n or b % n:
            raise ValueError(f"{poly} is not a polynomial in p^{n}, q^{n}")
        terms[(a // n, b // n)] = c
    return MultiPoly(SUM_OF_POWERS_VARIABLES, terms)


def sum_of_powers_scalings(n: int) -> Dict[str, Fraction]:
    c = Fraction(n * (n - 1))
    a, b = Fraction(n - 2), Fraction(n - 3)
    return {
        "I2": c / a ** 2,
        "I3": c ** 2 / a ** 4,
        "I4": c ** 2 / (a ** 2 * b ** 2),
        "I6": c ** 6 / (a ** 6 * b ** 6),
        "I7": c / (a * b),
        "I8": c ** 8 / (a ** 10 * b ** 6),
    }


@dataclass
class SumOfPowersReport:
    degree: int
    relations: Dict[str, bool]
    constants: Dict[str, bool]
    closed_forms: Dict[str, bool]
    rescaled: Dict[str, RationalFunction]

    @property
    def all_hold(self) -> bool:
        return all(self.relations.values()) and all(self.constants.values()) \
            and all(self.closed_forms.values())

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "relations": self.relations,
            "constants": self.constants,
            "closed_forms": self.closed_forms,
            "rescaled": {name: str(value) for name, value in self.rescaled.items()},
            "all_hold": self.all_hold,
        }


def sum_of_powers_conditions(n: int) -> SumOfPowersReport:
    """Check the signature relations of p^n + q^n + 1 in P = p^n, Q = q^n.

    Failed identities are reported, not raised.
    """
    if n < 4:
        raise ValueError("sum-of-powers relations need n >= 4")
    p, q = (MultiPoly.variable(v, TERNARY_VARIABLES) for v in TERNARY_VARIABLES)
    form = TernaryForm(p ** n + q ** n + 1, n)
    invariants = absolute_invariants(form)
    scalings = sum_of_powers_scalings(n)
    rescaled = {}
    for name, factor in scalings.items():
        value = invariants[name] * factor
        rescaled["i" + name[1:]] = RationalFunction(_in_powers(value.num, n), _in_powers(value.den, n))
    i2, i3, i4, i6, i7, i8 = (rescaled[k] for k in ("i2", "i3", "i4", "i6", "i7", "i8"))
    relations = {
        "i6 - i8": (i6 - i8).is_zero(),
        "i3 + i4 - i7": (i3 + i4 - i7).is_zero(),
        "i2 + 5*i7 - 16": (i2 + i7 * 5 - 16).is_zero(),
        "i4*i7^2 - i7^3 - 4*i4^2 + 4*i4*i7 - 8*i4 + 12*i7 + i8 - 20":
            (i4 * i7 ** 2 - i7 ** 3 - i4 ** 2 * 4 + i4 * i7 * 4 - i4 * 8 + i7 * 12 + i8 - 20).is_zero(),
    }
    constants = {
        "I1": invariants["I1"] == RationalFunction.constant(Fraction(-(n - 2) ** 2, n * (n - 1))),
        "I5": invariants["I5"] == RationalFunction.constant(
            Fraction(-((n - 2) ** 3) * (n - 3) ** 3, n ** 3 * (n - 1) ** 3)),
    }
    P, Q = (MultiPoly.variable(v, SUM_OF_POWERS_VARIABLES) for v in SUM_OF_POWERS_VARIABLES)
    PQ = P * Q
    closed_i7 = RationalFunction(P * Q ** 2 + Q ** 2 - P * Q * 2 + P ** 2 * Q + Q + P ** 2 + P, PQ)
    closed_i3 = RationalFunction(-((P + 1 - Q) * (P - 1 + Q) * (P - 1 - Q)), PQ)
    closed_forms = {"i7": i7 == closed_i7, "i3": i3 == closed_i3}
    report = SumOfPowersReport(n, relations, constants, closed_forms, rescaled)
    for label, holds in {**relations, **constants, **closed_forms}.items():
        if not holds:
            logger.warning("sum of powers n=%d: %s fails", n, label)
    return report
