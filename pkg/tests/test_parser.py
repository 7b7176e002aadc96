"""Tests for the polynomial and rational-function parser."""

import importlib
import warnings
from fractions import Fraction

import pytest

from src.core.errors import PolynomialSyntaxError, UnknownVariable
from src.core.gaussian import GaussianRational
from src.core.parser import parse_number, parse_polynomial, parse_rational_function
from src.core.polynomial import MultiPoly


def test_expands_products_and_powers(poly):
    p = MultiPoly.variable("p", ("p", "q"))
    q = MultiPoly.variable("q", ("p", "q"))
    assert poly("p^2*(p+1)-q^2") == p ** 3 + p ** 2 - q ** 2
    assert poly("(p+q)^2") == p * p + p * q * 2 + q * q
    assert poly("-p^2") == -(p ** 2)


def test_imaginary_unit_and_constant_division(poly):
    f = poly("i*p + p/2")
    assert f.terms[(1, 0)] == GaussianRational(Fraction(1, 2), 1)


def test_rejects_malformed_text(poly):
    for text in ("2p", "p+", "p^q", "(p", "p^(1/2)"):
        with pytest.raises(PolynomialSyntaxError):
            poly(text)


def test_rejects_division_by_polynomial(poly):
    with pytest.raises(PolynomialSyntaxError):
        poly("1/(p-1)")


def test_unknown_variable(poly):
    with pytest.raises(UnknownVariable):
        poly("p + x")


def test_rational_function():
    r = parse_rational_function("i*(p+1)/(p-1)", ("p",))
    assert r.den == parse_polynomial("p - 1", ("p",))
    assert r.num == parse_polynomial("i*p + i", ("p",))
    inverse = parse_rational_function("p^(-1)", ("p",))
    assert inverse.den == MultiPoly.variable("p")


def test_rational_function_reduces():
    r = parse_rational_function("(p^2-1)/(2*p-2)", ("p",))
    assert r.is_polynomial()
    assert r == parse_polynomial("p/2 + 1/2", ("p",))


def test_numbers():
    assert parse_number("5/2") == Fraction(5, 2)
    assert parse_number("1-2*i") == GaussianRational(1, -2)
    assert parse_number("-7/3") == Fraction(-7, 3)


def test_grammar_builds_without_deprecation_warnings():
    import src.core.parser as parser_module
    with warnings.catch_warnings():
        warnings.simplefilter("error", DeprecationWarning)
        reloaded = importlib.reload(parser_module)
        assert reloaded.parse_polynomial("p^2 + 1", ("p",)) == MultiPoly.variable("p") ** 2 + 1
