"""Tests for multivariate polynomials and rational functions."""

import random
from fractions import Fraction

import pytest
import sympy

from src.core.errors import DivisionByZero, MissingAssignment, ZeroInput
from src.core.gaussian import I, GaussianRational
from src.core.polynomial import (MultiPoly, exact_quotient, lcm, poly_gcd, resultant,
                                 squarefree_part)
from src.core.rational_function import RationalFunction


def to_sympy(f):
    return sympy.sympify(str(f).replace("^", "**"))


def from_sympy(expr, poly):
    return poly(str(sympy.expand(expr)).replace("**", "^"))


def test_variables_unify_on_arithmetic():
    p = MultiPoly.variable("p")
    q = MultiPoly.variable("q")
    s = p + q
    assert s.variables == ("p", "q")
    assert s - q == p
    assert (p * q).total_degree() == 2


def test_derivative_and_evaluate(poly):
    f = poly("p^3*q + 2*p*q^2 - 7")
    assert f.derivative("p") == poly("3*p^2*q + 2*q^2")
    assert f.derivative("q") == poly("p^3 + 4*p*q")
    assert f.evaluate({"p": 1, "q": 2}) == 3
    assert poly("p^2 + 1").evaluate({"p": I}) == 0
    with pytest.raises(MissingAssignment):
        f.evaluate({"p": 1})


def test_substitute(poly):
    f = poly("p^2 - q")
    g = f.substitute({"p": poly("q + 1")})
    assert g == poly("q^2 + q + 1")
    assert f.substitute({"q": Fraction(1, 2)}) == poly("p^2 - 1/2")


def test_univariate_round_trip(poly):
    f = poly("3*p^2 - p + 5", ("p",))
    assert f.univariate_coefficients() == [5, -1, 3]
    assert MultiPoly.from_univariate([5, -1, 3], "p") == f


def test_exact_quotient(poly):
    a = poly("p^3 - q^3")
    assert exact_quotient(a, poly("p - q")) == poly("p^2 + p*q + q^2")
    with pytest.raises(ArithmeticError):
        exact_quotient(a, poly("p + q + 1"))
    with pytest.raises(DivisionByZero):
        exact_quotient(a, MultiPoly.zero(("p", "q")))


@pytest.mark.parametrize("a, b", [
    ("(p+1)*(p-2)*q", "(p+1)*q^2"),
    ("(p^2+q^2-1)*(p-q)^2", "(p-q)*(p+3*q)"),
    ("p^4 - q^4", "p^6 - q^6"),
])
def test_gcd_matches_sympy(poly, a, b):
    fa, fb = poly(a), poly(b)
    expected = from_sympy(sympy.gcd(to_sympy(fa), to_sympy(fb)), poly)
    assert poly_gcd(fa, fb) == expected.normalized()


def test_gcd_of_coprime_is_one(poly):
    assert poly_gcd(poly("p^2 + 1"), poly("p + q")) == 1


def test_squarefree_part(poly):
    f = poly("(p-1)^2*(p+2)", ("p",))
    assert squarefree_part(f, "p") == poly("(p-1)*(p+2)", ("p",))
    with pytest.raises(ZeroInput):
        squarefree_part(MultiPoly.zero(("p",)), "p")


def test_resultant_univariate(poly):
    assert resultant(poly("p^2 + 1", ("p",)), poly("p - 2", ("p",)), "p") == 5


@pytest.mark.parametrize("a, b", [
    ("p^2 + q^2 - 1", "p - q"),
    ("p^3 - q", "p^2 + p*q - 2"),
])
def test_resultant_matches_sympy(poly, a, b):
    fa, fb = poly(a), poly(b)
    expected = sympy.resultant(to_sympy(fa), to_sympy(fb), sympy.Symbol("p"))
    assert resultant(fa, fb, "p") == from_sympy(expected, poly)


def test_lcm(poly):
    assert lcm([poly("p^2 - 1"), poly("p + 1"), poly("2*q")]) == poly("p^2*q - q")


def test_text_and_primitive(poly):
    f = poly("p^2/2 - q/3")
    assert str(f.primitive()) == "3*p^2 - 2*q"
    assert str(poly("-p + 1")) == "-p + 1"
    assert str(MultiPoly.constant(GaussianRational(0, 2), ("p",))) == "2*i"


def test_rational_function_reduction(poly):
    r = RationalFunction(poly("p^2 - 1"), poly("2*p - 2"))
    assert r.is_polynomial()
    assert r.num == poly("p/2 + 1/2")
    s = RationalFunction(poly("p"), poly("2*p + 2"))
    assert s.den == poly("p + 1")
    assert s.num == poly("p/2")


def test_rational_function_arithmetic(poly):
    a = RationalFunction(poly("1"), poly("p"))
    b = RationalFunction(poly("1"), poly("q"))
    assert a + b == RationalFunction(poly("p + q"), poly("p*q"))
    assert a * poly("p") == 1
    assert (a / b) ** 2 == RationalFunction(poly("q^2"), poly("p^2"))
    assert RationalFunction.constant(Fraction(-1, 6)).constant_value() == Fraction(-1, 6)


def test_rational_function_zero_denominator(poly):
    with pytest.raises(DivisionByZero):
        RationalFunction(poly("p"), MultiPoly.zero(("p", "q")))
    r = RationalFunction(poly("q"), poly("p - 1"))
    with pytest.raises(DivisionByZero):
        r.evaluate({"p": 1, "q": 2})
    assert r.evaluate({"p": 3, "q": 2}) == 1


def test_rational_function_derivative(poly):
    r = RationalFunction(poly("1"), poly("p"))
    assert r.derivative("p") == RationalFunction(poly("-1"), poly("p^2"))


def random_poly(rng, variables=("p", "q")):
    terms = {}
    for _ in range(rng.randint(1, 5)):
        exp = tuple(rng.randint(0, 3) for _ in variables)
        re = Fraction(rng.randint(-6, 6), rng.randint(1, 3))
        terms[exp] = GaussianRational(re, rng.randint(-2, 2))
    return MultiPoly(variables, terms)


@pytest.mark.parametrize("seed", range(20))
def test_ring_axioms(seed):
    rng = random.Random(seed)
    a, b, c = (random_poly(rng) for _ in range(3))
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert a * 1 == a


@pytest.mark.parametrize("seed", range(20))
def test_derivative_is_a_derivation(seed):
    rng = random.Random(seed)
    a, b = random_poly(rng), random_poly(rng)
    for v in ("p", "q"):
        assert (a * b).derivative(v) == a.derivative(v) * b + a * b.derivative(v)
        assert (a + b).derivative(v) == a.derivative(v) + b.derivative(v)
