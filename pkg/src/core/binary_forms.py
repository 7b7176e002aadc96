"""
Binary forms: covariants, the absolute invariants J and K, symmetry
classification, projective index and explicit Mobius symmetries.
"""

from dataclasses import dataclass
from fractions import Fraction
from logging import getLogger
from typing import Dict, List, Optional, Sequence, Tuple

from typing_extensions import Literal

from src.core.errors import (GenericityFailure, HessianZero, NotASymmetry,
                             NotExceptionalWeight, NotFinite, ResourceLimit,
                             ZeroInput)
from src.core.gaussian import GaussianRational, Number
from src.core.groebner import GroebnerLimits, Ideal, MonomialOrder, buchberger
from src.core.mobius import Mobius
from src.core.polynomial import MultiPoly, poly_gcd, squarefree_part
from src.core.rational_function import RationalFunction
from src.core.zero_dimensional import solve_zero_dimensional
from src.utils.certified import AlgebraicCoefficient, principal_root
from src.utils.constants import (BANNER_MAXIMAL, BANNER_ONE_DIMENSIONAL,
                                 BANNER_TWO_DIMENSIONAL, BINARY_IMAGE_VARIABLE,
                                 BINARY_VARIABLE, DEFAULT_BINARY_PROBES,
                                 DEFAULT_PRECISION_BITS,
                                 DEFAULT_STABLE_PROBE_COUNT, LOGGER_NAME)

logger = getLogger(LOGGER_NAME + ".binary_forms")

SymmetryTag = Literal["TwoDimensional", "OneDimensional", "Finite"]
Mode = Literal["complex", "real"]


class BinaryForm:
    """A binary form of degree n given by its inhomogenization f(p).

    Args:
        f: Polynomial in the single variable p
        degree: n, at least the degree of f
        weight: Weight k of the form

    Raises:
        ZeroInput: If f is zero
        ValueError: If f has degree above n or other variables
    """

    def __init__(self, f: MultiPoly, degree: int, weight: int = 0,
                 variable: str = BINARY_VARIABLE) -> None:
        if f.is_zero():
            raise ZeroInput("binary form must be nonzero")
        extra = set(f.support()) - {variable}
        if extra:
            raise ValueError(f"binary form uses variables other than {variable}: {sorted(extra)}")
        self.variable = variable
        self.f = f.embed((variable,))
        if self.f.degree(variable) > degree:
            raise ValueError(f"degree {self.f.degree(variable)} of {f} exceeds n={degree}")
        if degree < 1:
            raise ValueError("degree must be positive")
        self.degree = degree
        self.weight = weight

    def coefficients(self) -> List[GaussianRational]:
        """[a_0, ..., a_n], padded with zeros up to the degree."""
        coeffs = self.f.univariate_coefficients(self.variable)
        return coeffs + [GaussianRational(0)] * (self.degree + 1 - len(coeffs))

    def homogeneous(self, x: str = "x", y: str = "y") -> MultiPoly:
        """F(x, y) = y^n f(x/y)."""
        terms = {(k, self.degree - k): c for k, c in enumerate(self.coefficients()) if c}
        return MultiPoly((x, y), terms)

    def transformed(self, alpha: Number, beta: Number, gamma: Number, delta: Number) -> "BinaryForm":
        """(gamma p + delta)^n f((alpha p + beta)/(gamma p + delta))."""
        p = MultiPoly.variable(self.variable)
        numerator = p * alpha + beta
        denominator = p * gamma + delta
        result = MultiPoly.zero((self.variable,))
        for k, c in enumerate(self.coefficients()):
            if c:
                result = result + (numerator ** k) * (denominator ** (self.degree - k)) * c
        return BinaryForm(result, self.degree, self.weight, self.variable)

    @property
    def is_exceptional_weight(self) -> bool:
        """k = -n/2, where every scalar multiple of a matrix symmetry is one."""
        return 2 * self.weight == -self.degree

    def __repr__(self) -> str:
        return f"BinaryForm({self.f}, n={self.degree}, k={self.weight})"


@dataclass(frozen=True)
class CovariantSet:
    H: MultiPoly
    T: MultiPoly
    U: MultiPoly


@dataclass(frozen=True)
class InvariantPair:
    J: RationalFunction
    K: RationalFunction


@dataclass(frozen=True)
class SymmetryClass:
    """Symmetry-group type; maximal_class only meaningful for Finite."""

    tag: SymmetryTag
    maximal_class: bool = False

    @property
    def is_finite(self) -> bool:
        return self.tag == "Finite"

    def banner(self) -> Optional[str]:
        if self.tag == "TwoDimensional":
            return BANNER_TWO_DIMENSIONAL
        if self.tag == "OneDimensional":
            return BANNER_ONE_DIMENSIONAL
        return BANNER_MAXIMAL if self.maximal_class else None


@dataclass
class MatrixSymmetry:
    """A projective symmetry lifted to a matrix.

    ``mu`` is the scalar with (gamma p + delta)^n f(m(p)) = mu f(p) for the
    representative; ``mu_root`` and ``matrix`` follow ``matrix_symmetry``.
    ``multiplicity`` is None when the lifts form a one-parameter family.
    """

    mobius: Mobius
    mu: AlgebraicCoefficient
    mu_root: AlgebraicCoefficient
    matrix: Tuple[Tuple[AlgebraicCoefficient, AlgebraicCoefficient],
                  Tuple[AlgebraicCoefficient, AlgebraicCoefficient]]
    multiplicity: Optional[int]

    def to_json(self) -> dict:
        return {
            "mobius": self.mobius.to_json(),
            "mu": self.mu.to_json(),
            "mu_root": self.mu_root.to_json(),
            "matrix": [[entry.to_json() for entry in row] for row in self.matrix],
            "multiplicity": self.multiplicity,
        }


# Covariants and invariants

def covariants(form: BinaryForm) -> CovariantSet:
    """Inhomogenized Hessian H and the covariants T and U."""
    p = form.variable
    n = Fraction(form.degree)
    f = form.f
    f1 = f.derivative(p)
    f2 = f1.derivative(p)
    f3 = f2.derivative(p)
    f4 = f3.derivative(p)

    H = (f * f2 - f1 * f1 * ((n - 1) / n)) * (n * (n - 1))
    T = (f * f * f3
         - f * f1 * f2 * (3 * (n - 2) / n)
         + f1 ** 3 * (2 * (n - 1) * (n - 2) / n ** 2)) * (-(n ** 2) * (n - 1))
    V = (f ** 3 * f4
         - f * f * f1 * f3 * (4 * (n - 3) / n)
         + f * f1 * f1 * f2 * (6 * (n - 2) * (n - 3) / n ** 2)
         - f1 ** 4 * (3 * (n - 1) * (n - 2) * (n - 3) / n ** 3))
    if form.degree > 1:
        U = V * (n ** 3 * (n - 1)) - H * H * (3 * (n - 2) / (n - 1))
    else:
        U = V * (n ** 3 * (n - 1))
    return CovariantSet(H, T, U)


def invariants_jk(form: BinaryForm, covs: Optional[CovariantSet] = None) -> InvariantPair:
    """J = T^2/H^3 and K = U/H^2, reduced.

    Raises:
        HessianZero: If H vanishes identically
    """
    covs = covs or covariants(form)
    if covs.H.is_zero():
        raise HessianZero(BANNER_TWO_DIMENSIONAL)
    J = RationalFunction.from_power(covs.T * covs.T, covs.H, 3)
    K = RationalFunction.from_power(covs.U, covs.H, 2)
    return InvariantPair(J, K)


def classify(form: BinaryForm) -> SymmetryClass:
    covs = covariants(form)
    if covs.H.is_zero():
        return SymmetryClass("TwoDimensional")
    pair = invariants_jk(form, covs)
    if pair.J.is_constant():
        return SymmetryClass("OneDimensional")
    return SymmetryClass("Finite", pair.K.is_constant())


def _require_finite(form: BinaryForm) -> Tuple[SymmetryClass, InvariantPair]:
    covs = covariants(form)
    if covs.H.is_zero():
        raise NotFinite(BANNER_TWO_DIMENSIONAL)
    pair = invariants_jk(form, covs)
    if pair.J.is_constant():
        raise NotFinite(BANNER_ONE_DIMENSIONAL)
    return SymmetryClass("Finite", pair.K.is_constant()), pair


# Symmetry equations and counting

def _cross(num: MultiPoly, den: MultiPoly, p: str, image: str) -> MultiPoly:
    """num(p) den(P) - num(P) den(p) over (p, P)."""
    variables = (p, image)
    a_p, b_p = num.embed(variables), den.embed(variables)
    a_image, b_image = a_p.rename({p: image}), b_p.rename({p: image})
    return a_p * b_image.embed(variables) - a_image.embed(variables) * b_p


def symmetry_equations(form: BinaryForm) -> Tuple[MultiPoly, MultiPoly]:
    """Eq1 = A(p)B(P) - A(P)B(p) and Eq2 = C(P)D(p) - C(p)D(P).

    Raises:
        NotFinite: If the symmetry group is not discrete
    """
    _, pair = _require_finite(form)
    p = form.variable
    eq1 = _cross(pair.J.num.embed((p,)), pair.J.den.embed((p,)), p, BINARY_IMAGE_VARIABLE)
    eq2 = -_cross(pair.K.num.embed((p,)), pair.K.den.embed((p,)), p, BINARY_IMAGE_VARIABLE)
    return eq1, eq2


def index_bound(form: BinaryForm) -> int:
    """6n - 12 for the maximal class, 4n - 8 otherwise.

    Raises:
        NotFinite: If the symmetry group is not discrete
    """
    symmetry_class, _ = _require_finite(form)
    n = form.degree
    return 6 * n - 12 if symmetry_class.maximal_class else 4 * n - 8


def count_at_probe(form: BinaryForm, pair: InvariantPair, p0: GaussianRational) -> Optional[int]:
    """Number of distinct P with J(P) = J(p0) and K(P) = K(p0); None if p0 is a pole."""
    p = form.variable
    at = {p: p0}
    B0, D0 = pair.J.den.evaluate(at), pair.K.den.evaluate(at)
    if not B0 or not D0:
        return None
    A0, C0 = pair.J.num.evaluate(at), pair.K.num.evaluate(at)
    image = (BINARY_IMAGE_VARIABLE,)
    rename = {p: BINARY_IMAGE_VARIABLE}
    e1 = (pair.J.den.rename(rename).embed(image) * A0 - pair.J.num.rename(rename).embed(image) * B0)
    e2 = (pair.K.num.rename(rename).embed(image) * D0 - pair.K.den.rename(rename).embed(image) * C0)
    g = e1 if e2.is_zero() else poly_gcd(e1, e2)
    if g.is_zero():
        return None
    return squarefree_part(g, BINARY_IMAGE_VARIABLE).degree(BINARY_IMAGE_VARIABLE)


def projective_index(form: BinaryForm, probes: Sequence[Number] = None,
                     stable_count: int = DEFAULT_STABLE_PROBE_COUNT) -> int:
    """Number of Mobius symmetries, counted at generic probe points.

    Returns the first count observed at ``stable_count`` consecutive probes;
    poles of J or K are skipped without breaking a run.

    Raises:
        NotFinite: If the symmetry group is not discrete
        GenericityFailure: If no count stabilizes over the probes
    """
    _, pair = _require_finite(form)
    if probes is None:
        probes = [Fraction(text) for text in DEFAULT_BINARY_PROBES]
    observed: List[int] = []
    run = 0
    for p0 in probes:
        p0 = GaussianRational.coerce(p0)
        count = count_at_probe(form, pair, p0)
        if count is None:
            logger.warning("probe p0=%s is a pole of J or K, skipped", p0)
            continue
        run = run + 1 if observed and observed[-1] == count else 1
        observed.append(count)
        logger.info("probe p0=%s: %d images", p0, count)
        if run >= stable_count:
            return count
    raise GenericityFailure(f"no stable symmetry count over probes {list(map(str, probes))}: {observed}")


def full_index(projective: int, form: BinaryForm, mode: Mode = "complex") -> Optional[int]:
    """l * projective index; None at the exceptional weight, where l is infinite."""
    lifts = multiplicity(form, mode)
    return None if lifts is None else lifts * projective


def multiplicity(form: BinaryForm, mode: Mode = "complex") -> Optional[int]:
    """Matrix symmetries over each projective symmetry.

    A symmetry A of a weight k form lifts to lambda * A whenever
    lambda^(n+2k) = 1 / (mu det(A)^k): |n + 2k| solutions over C, and 2 or 1
    real ones as n + 2k is even or odd. At n + 2k = 0 the lifts form a
    one-parameter family and None is returned.
    """
    exponent = abs(form.degree + 2 * form.weight)
    if exponent == 0:
        return None
    if mode == "complex":
        return exponent
    return 2 if exponent % 2 == 0 else 1


# Explicit symmetries

def _transformed_coefficients(coeffs: Sequence, numerator: Sequence, denominator: Sequence,
                              n: int, zero, one) -> List:
    """Coefficients of sum a_k num^k den^(n-k) for linear num, den given low-first."""

    def multiply(a: List, b: Sequence) -> List:
        result = [zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                result[i + j] = result[i + j] + x * y
        return result

    num_powers = [[one]]
    den_powers = [[one]]
    for _ in range(n):
        num_powers.append(multiply(num_powers[-1], numerator))
        den_powers.append(multiply(den_powers[-1], denominator))
    total = [zero] * (n + 1)
    for k, a in enumerate(coeffs):
        if not a:
            continue
        term = multiply(num_powers[k], den_powers[n - k])
        for j, c in enumerate(term):
            total[j] = total[j] + c * a
    return total


def _chart_system(form: BinaryForm, chart: str) -> Ideal:
    coeffs = form.coefficients()
    n = form.degree
    if chart == "A":
        variables = ("alpha", "beta", "gamma", "t")
    else:
        variables = ("alpha", "beta", "t")
    var = {v: MultiPoly.variable(v, variables) for v in variables}
    one = MultiPoly.one(variables)
    zero = MultiPoly.zero(variables)
    numerator = [var["beta"], var["alpha"]]
    denominator = [one, var["gamma"]] if chart == "A" else [zero, one]
    transformed = _transformed_coefficients(coeffs, numerator, denominator, n, zero, one)
    k0 = max(k for k, a in enumerate(coeffs) if a)
    equations = [transformed[j] * coeffs[k0] - transformed[k0] * coeffs[j]
                 for j in range(n + 1) if j != k0]
    if chart == "A":
        det = var["alpha"] - var["beta"] * var["gamma"]
    else:
        det = -var["beta"]
    equations.append(var["t"] * det - 1)
    return Ideal([e for e in equations if not e.is_zero()], variables)


def solve_symmetries(form: BinaryForm, precision_bits: int = DEFAULT_PRECISION_BITS,
                     limits: Optional[GroebnerLimits] = None) -> List[Mobius]:
    """All projective symmetries of a form with a discrete symmetry group.

    Solves (gamma p + delta)^n f(m(p)) = mu f(p) in the charts delta = 1 and
    (gamma, delta) = (1, 0).

    Raises:
        NotFinite: If the symmetry group is not discrete
        ResourceLimit: If a Groebner computation exceeds its caps
    """
    _require_finite(form)
    found: List[Mobius] = []
    for chart in ("A", "B"):
        ideal = _chart_system(form, chart)
        gb = buchberger(ideal, MonomialOrder.grevlex(), limits)
        if gb.is_unit():
            logger.info("chart %s: no solutions", chart)
            continue
        names = ["alpha", "beta", "gamma"] if chart == "A" else ["alpha", "beta"]
        points = solve_zero_dimensional(gb, precision_bits, coordinates=names, limits=limits)
        logger.info("chart %s: %d solutions", chart, len(points))
        for point in points:
            if chart == "A":
                m = Mobius(point["alpha"], point["beta"], point["gamma"], 1)
            else:
                m = Mobius(point["alpha"], point["beta"], 1, 0)
            if not any(m.agrees_with(other) for other in found):
                found.append(m)
    return sorted(found, key=Mobius.sort_key)


def _mu(form: BinaryForm, m: Mobius) -> AlgebraicCoefficient:
    coeffs = form.coefficients()
    alpha, beta, gamma, delta = m.representative
    zero = AlgebraicCoefficient(GaussianRational(0))
    one = AlgebraicCoefficient(GaussianRational(1))
    transformed = _transformed_coefficients(coeffs, [beta, alpha], [delta, gamma], form.degree, zero, one)
    k0 = max(k for k, a in enumerate(coeffs) if a)
    mu = transformed[k0] / coeffs[k0]
    for c, a in zip(transformed, coeffs):
        residual = c - mu * a
        if not residual.may_be_zero():
            raise NotASymmetry(f"{m} does not map {form.f} to a multiple of itself")
    return mu


def matrix_symmetry(form: BinaryForm, m: Mobius, precision_bits: int = DEFAULT_PRECISION_BITS,
                    mode: Mode = "complex") -> MatrixSymmetry:
    """Lift a projective symmetry to a matrix symmetry of the weighted form.

    For weight k the representative A is rescaled by lambda with
    lambda^(n+2k) = 1 / (mu det(A)^k); ``mu_root`` is the principal
    |n + 2k|-th root of mu det(A)^k. At the exceptional weight the
    unimodular representative is returned and ``mu_root`` is sqrt(det A).

    Raises:
        NotASymmetry: If (gamma p + delta)^n f(m(p)) / f(p) is not constant, or
            at the exceptional weight mu det(A)^k != 1
    """
    mu = _mu(form, m)
    det = m.det()
    k = form.weight
    target = mu
    if k > 0:
        target = mu * det ** k
    elif k < 0:
        target = mu / det ** (-k)
    exponent = form.degree + 2 * k
    a, b, c, d = m.representative
    if exponent == 0:
        if not target.agrees_with(AlgebraicCoefficient(GaussianRational(1))):
            raise NotASymmetry(f"{m} is not a symmetry at the exceptional weight {k}")
        root = principal_root(det, 2, precision_bits)
        matrix = ((a / root, b / root), (c / root, d / root))
    elif exponent > 0:
        root = principal_root(target, exponent, precision_bits)
        matrix = ((a / root, b / root), (c / root, d / root))
    else:
        root = principal_root(target, -exponent, precision_bits)
        matrix = ((a * root, b * root), (c * root, d * root))
    return MatrixSymmetry(m, mu, root, matrix, multiplicity(form, mode))


def exceptional_weight_filter(form: BinaryForm, symmetries: Sequence[Mobius]) -> List[Mobius]:
    """Symmetries that survive at the exceptional weight k = -n/2.

    Keeps m when mu / det^(n/2) = 1 for its representative.

    Raises:
        NotExceptionalWeight: If n is odd or k != -n/2
    """
    n = form.degree
    if n % 2 or 2 * form.weight != -n:
        raise NotExceptionalWeight(f"weight {form.weight} is not -n/2 for n={n}")
    kept = []
    for m in symmetries:
        unimodular = _mu(form, m) / (m.det() ** (n // 2))
        if unimodular.agrees_with(AlgebraicCoefficient(GaussianRational(1))):
            kept.append(m)
    return kept


def solve_or_count(form: BinaryForm, precision_bits: int, limits: Optional[GroebnerLimits],
                   probes: Sequence[Number], stable_count: int) -> Dict:
    """Projective index with the explicit list when solving fits in the caps."""
    index = projective_index(form, probes, stable_count)
    result: Dict = {"projective_index": index, "symmetries": None, "diagnostics": []}
    try:
        symmetries = solve_symmetries(form, precision_bits, limits)
    except ResourceLimit as exc:
        result["diagnostics"].append(f"symmetry listing skipped: {exc}")
        return result
    if len(symmetries) != index:
        result["diagnostics"].append(
            f"listed {len(symmetries)} symmetries but counted {index}")
    result["symmetries"] = symmetries
    return result
