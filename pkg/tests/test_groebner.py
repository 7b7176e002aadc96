"""Tests for Buchberger's algorithm and Groebner-basis queries."""

import random

import pytest
import sympy

from src.core.errors import ImproperIdeal, NotZeroDimensional, ResourceLimit
from src.core.groebner import (INFINITE, GroebnerLimits, Ideal, MonomialOrder, buchberger,
                               eliminate)
from src.core.polynomial import MultiPoly
from src.core.zero_dimensional import radical_basis

XY = ("x", "y")
XYZ = ("x", "y", "z")


@pytest.fixture
def xy(poly):
    return lambda text: poly(text, XY)


@pytest.fixture
def xyz(poly):
    return lambda text: poly(text, XYZ)


def test_lex_basis(xy):
    ideal = Ideal([xy("x^2 + 2*x*y^2"), xy("x*y + 2*y^3 - 1")], XY)
    gb = buchberger(ideal, MonomialOrder.lex())
    assert gb.basis == [xy("y^3 - 1/2"), xy("x")]


def test_grevlex_basis_matches_sympy(xyz):
    texts = ["x^2 + y*z - 2", "x*z + y^2 - 3", "x*y + z^2 - 5"]
    order = MonomialOrder.grevlex()
    gb = buchberger(Ideal([xyz(t) for t in texts], XYZ), order)
    symbols = sympy.symbols("x y z")
    expected = sympy.groebner([sympy.sympify(t.replace("^", "**")) for t in texts],
                              *symbols, order="grevlex")
    others = [xyz(str(g.as_expr()).replace("**", "^")) for g in expected.exprs]
    assert len(gb) == len(others)
    assert all(gb.contains(g) for g in others)
    expected_leads = {max(g.terms, key=order.key) for g in others}
    assert set(gb.leading_monomials) == expected_leads


def test_basis_is_monic_and_reduced(xyz):
    gb = buchberger(Ideal([xyz("x^2 + y*z - 2"), xyz("x*z + y^2 - 3"), xyz("x*y + z^2 - 5")], XYZ))
    for k, g in enumerate(gb.basis):
        lead = gb.leading_monomials[k]
        assert g.terms[lead] == 1
        others = gb.basis[:k] + gb.basis[k + 1:]
        assert all(not any(all(a <= b for a, b in zip(max(h.terms, key=gb.order.key), exp))
                           for exp in g.terms) for h in others)


def test_unit_ideal(xy):
    gb = buchberger(Ideal([xy("x"), xy("x - 1")], XY))
    assert gb.is_unit()
    assert gb.quotient_dimension() == 0
    with pytest.raises(ImproperIdeal):
        gb.variety_dimension()


def test_zero_ideal_has_empty_basis():
    gb = buchberger(Ideal([], XY))
    assert len(gb) == 0
    assert gb.variety_dimension() == 2


def test_quotient_dimension_and_radicality(xy):
    gb = buchberger(Ideal([xy("x^2 - 1"), xy("y^2 - 4")], XY))
    assert gb.quotient_dimension() == 4
    assert gb.variety_dimension() == 0
    assert gb.is_radical_zero_dim()

    fat = buchberger(Ideal([xy("x^2"), xy("y - 1")], XY))
    assert fat.quotient_dimension() == 2
    assert not fat.is_radical_zero_dim()
    reduced = radical_basis(fat)
    assert reduced.quotient_dimension() == 1
    assert reduced.contains(xy("x"))


def test_positive_dimensional(xy):
    gb = buchberger(Ideal([xy("x*y")], XY))
    assert gb.quotient_dimension() == INFINITE
    assert gb.variety_dimension() == 1
    with pytest.raises(NotZeroDimensional):
        gb.univariate_eliminant("x")


def test_normal_form_and_membership(xy):
    gb = buchberger(Ideal([xy("x^2 - 1"), xy("y^2 - 4")], XY))
    assert gb.normal_form(xy("x^3 + y^2")) == xy("x + 4")
    assert gb.contains(xy("x^2*y - y"))
    assert not gb.contains(xy("x - 1"))


def test_minimal_polynomial_and_eliminant(xy):
    gb = buchberger(Ideal([xy("x^2 - 1"), xy("y^2 - 4")], XY))
    z = gb.minimal_polynomial(xy("x + y"), "z")
    assert z.univariate_coefficients() == [9, 0, -10, 0, 1]
    diagonal = buchberger(Ideal([xy("x^2 - 2"), xy("y - x")], XY))
    assert diagonal.univariate_eliminant("y").univariate_coefficients() == [-2, 0, 1]


def test_multiplication_matrix(xy):
    gb = buchberger(Ideal([xy("x^2 - 2"), xy("y - 1")], XY))
    (a, b), (c, d) = gb.multiplication_matrix(xy("x"))
    assert a + d == 0
    assert a * d - b * c == -2
    (e, f), (g, h) = gb.multiplication_matrix(xy("y"))
    assert (e, f, g, h) == (1, 0, 0, 1)


def test_eliminate_twisted_cubic_projection(poly):
    ideal = Ideal([poly("x - t^2", ("t", "x", "y")), poly("y - t^3", ("t", "x", "y"))])
    projected = eliminate(ideal, ["t"])
    assert projected.variables == XY
    cusp = poly("x^3 - y^2", XY)
    gb = buchberger(projected)
    assert gb.contains(cusp)
    principal = buchberger(Ideal([cusp], XY))
    assert all(principal.contains(g) for g in projected.generators)


def test_resource_limit(xyz):
    ideal = Ideal([xyz("x^2 + y*z - 2"), xyz("x*z + y^2 - 3"), xyz("x*y + z^2 - 5")], XYZ)
    with pytest.raises(ResourceLimit):
        buchberger(ideal, limits=GroebnerLimits(max_basis_size=3))


def test_block_order_eliminates_front_variables():
    order = MonomialOrder.block(1)
    assert order.key((1, 0, 0)) > order.key((0, 5, 5))
    assert order.key((0, 2, 0)) > order.key((0, 1, 1))


IDEALS = [
    ["x^2 + y*z - 2", "x*z + y^2 - 3", "x*y + z^2 - 5"],
    ["x^2 - y*z", "y^2 - x*z", "z^2 - x*y + 1"],
    ["x*y - z", "y*z - x", "x*z - y", "x + y + z - 1"],
]


@pytest.mark.parametrize("texts", IDEALS)
@pytest.mark.parametrize("seed", range(3))
def test_basis_independent_of_generator_order(xyz, texts, seed):
    order = MonomialOrder.grevlex()
    reference = buchberger(Ideal([xyz(t) for t in texts], XYZ), order)
    shuffled = list(texts)
    random.Random(seed).shuffle(shuffled)
    assert buchberger(Ideal([xyz(t) for t in shuffled], XYZ), order) == reference


@pytest.mark.parametrize("texts", IDEALS)
def test_normal_form_is_idempotent(xyz, texts):
    gb = buchberger(Ideal([xyz(t) for t in texts], XYZ))
    rng = random.Random(len(texts))
    for _ in range(5):
        exps = [tuple(rng.randint(0, 3) for _ in XYZ) for _ in range(4)]
        f = MultiPoly(XYZ, {exp: rng.randint(-5, 5) for exp in exps}) + 1
        reduced = gb.normal_form(f)
        assert gb.normal_form(reduced) == reduced
        assert gb.contains(f - reduced)
