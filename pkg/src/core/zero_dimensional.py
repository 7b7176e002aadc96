"""
Solving zero-dimensional systems through a rational univariate
representation with certified root disks.
"""

from dataclasses import dataclass, field
from itertools import count
from logging import getLogger
from typing import Dict, List, Optional, Sequence

import mpmath as mp

from src.core.errors import NotZeroDimensional
from src.core.gaussian import GaussianRational
from src.core.groebner import (INFINITE, GroebnerBasis, GroebnerLimits, Ideal,
                               LinearSpan, buchberger)
from src.core.polynomial import MultiPoly, exact_quotient, squarefree_part
from src.utils.certified import (AlgebraicCoefficient,
                                 certified_roots, evaluate_ball, identify)
from src.utils.constants import GUARD_BITS, LOGGER_NAME

logger = getLogger(LOGGER_NAME + ".zero_dimensional")

SEPARATING_VARIABLE = "theta"


@dataclass
class CertifiedPoint:
    """One solution; coordinates are exact or certified balls."""

    coordinates: Dict[str, AlgebraicCoefficient] = field(default_factory=dict)

    def __getitem__(self, name: str) -> AlgebraicCoefficient:
        return self.coordinates[name]

    def to_json(self) -> dict:
        return {name: c.to_json() for name, c in self.coordinates.items()}


@dataclass
class UnivariateRepresentation:
    """x = g_x(theta) for every variable, where m(theta) = 0."""

    separating_form: MultiPoly
    eliminant: MultiPoly
    parametrizations: Dict[str, List[GaussianRational]]


def _candidate_forms(variables: Sequence[str]):
    for v in variables:
        yield MultiPoly.variable(v, variables)
    for t in count(2):
        terms = {}
        for k in range(len(variables)):
            exp = [0] * len(variables)
            exp[k] = 1
            terms[tuple(exp)] = t ** k
        yield MultiPoly(variables, terms)


def radical_basis(gb: GroebnerBasis, limits: Optional[GroebnerLimits] = None) -> GroebnerBasis:
    """Basis of the radical of a zero-dimensional ideal.

    Adds the squarefree part of every univariate eliminant.
    """
    extra = []
    for v in gb.variables:
        eliminant = gb.univariate_eliminant(v)
        reduced = squarefree_part(eliminant, v)
        if reduced.degree(v) < eliminant.degree(v):
            extra.append(reduced.embed(gb.variables))
    if not extra:
        return gb
    logger.info("ideal is not radical; adding %d squarefree eliminants", len(extra))
    return buchberger(Ideal(list(gb.basis) + extra, gb.variables), gb.order, limits)


def univariate_representation(gb: GroebnerBasis, max_tries: int = 40) -> UnivariateRepresentation:
    """Rational univariate representation of a radical zero-dimensional ideal.

    Raises:
        NotZeroDimensional: If the quotient is infinite-dimensional
        ArithmeticError: If no separating form is found
    """
    dimension = gb.quotient_dimension()
    if dimension == INFINITE:
        raise NotZeroDimensional("ideal is not zero-dimensional")
    for tries, form in enumerate(_candidate_forms(gb.variables)):
        if tries >= max_tries:
            break
        eliminant = gb.minimal_polynomial(form, SEPARATING_VARIABLE)
        if eliminant.degree(SEPARATING_VARIABLE) != dimension:
            continue
        if squarefree_part(eliminant, SEPARATING_VARIABLE).degree(SEPARATING_VARIABLE) != dimension:
            continue
        span = LinearSpan()
        power = gb.normal_form(MultiPoly.one(gb.variables))
        for k in range(dimension):
            span.add(power.terms, k)
            power = gb.normal_form(power * form)
        parametrizations = {}
        for v in gb.variables:
            image = gb.normal_form(MultiPoly.variable(v, gb.variables))
            combo = span.express(image.terms)
            parametrizations[v] = [combo.get(k, GaussianRational(0)) for k in range(dimension)]
        logger.info("separating form %s, eliminant degree %d", form, dimension)
        return UnivariateRepresentation(form, eliminant, parametrizations)
    raise ArithmeticError("no separating linear form found")


def solve_zero_dimensional(gb: GroebnerBasis, precision_bits: int,
                           coordinates: Optional[Sequence[str]] = None,
                           limits: Optional[GroebnerLimits] = None) -> List[CertifiedPoint]:
    """All points of a zero-dimensional variety, certified.

    Coordinates lying in Q(i) are returned exactly; others as balls of
    radius at most 2^-precision_bits with the coordinate's squarefree
    eliminant (with its Q(i) roots divided out) as annihilator.

    Args:
        gb: Groebner basis of the system
        precision_bits: Target precision of numeric coordinates
        coordinates: Variables to report, all by default
        limits: Caps for the radical computation

    Returns:
        One point per solution

    Raises:
        NotZeroDimensional: If the variety is not finite
    """
    if gb.is_unit():
        return []
    if gb.quotient_dimension() == INFINITE:
        raise NotZeroDimensional("ideal is not zero-dimensional")
    gb = radical_basis(gb, limits)
    names = list(coordinates) if coordinates is not None else list(gb.variables)
    rur = univariate_representation(gb)
    thetas = certified_roots(rur.eliminant.univariate_coefficients(SEPARATING_VARIABLE),
                             precision_bits + GUARD_BITS)
    target = mp.mpf(2) ** (-precision_bits)

    eliminants = {v: squarefree_part(gb.univariate_eliminant(v), v) for v in names}
    points = []
    with mp.workprec(precision_bits + 2 * GUARD_BITS):
        for theta in thetas:
            point = CertifiedPoint()
            for v in names:
                ball = evaluate_ball(rur.parametrizations[v], theta)
                if ball.radius > target:
                    logger.warning("coordinate %s radius %s above target", v, mp.nstr(ball.radius, 5))
                exact = identify(ball, eliminants[v])
                point.coordinates[v] = AlgebraicCoefficient(exact if exact is not None else ball)
            points.append(point)

    for v in names:
        annihilator = eliminants[v]
        for value in {p[v].value for p in points if p[v].is_exact}:
            linear = MultiPoly(annihilator.variables, {(1,): 1, (0,): -value})
            annihilator = exact_quotient(annihilator, linear.embed(annihilator.variables))
        for p in points:
            if not p[v].is_exact:
                p.coordinates[v] = AlgebraicCoefficient(p[v].value, annihilator.rename({v: "z"}))
    logger.info("solved zero-dimensional system: %d points", len(points))
    return points
