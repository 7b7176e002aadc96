"""Tests for certified balls, root isolation and the zero-dimensional solver."""

from fractions import Fraction

import mpmath as mp
import pytest

from src.core.errors import DivisionByZero
from src.core.gaussian import I, GaussianRational
from src.core.groebner import Ideal, buchberger
from src.core.polynomial import MultiPoly
from src.core.zero_dimensional import solve_zero_dimensional
from src.utils.certified import (AlgebraicCoefficient, ComplexBall, certified_roots,
                                 identify, principal_root)

XY = ("x", "y")


def test_ball_arithmetic_encloses_exact_result():
    third = ComplexBall.coerce(Fraction(1, 3))
    assert (third * 3).contains(1)
    assert (third + third - Fraction(2, 3)).contains_zero()
    assert ComplexBall.coerce(I).is_certified_real() is False
    with pytest.raises(DivisionByZero):
        ComplexBall(0, 0.1).inverse()


def test_certified_roots_of_x_squared_minus_two():
    balls = certified_roots([-2, 0, 1], 128)
    assert len(balls) == 2
    target = mp.mpf(2) ** -128
    assert all(b.radius <= target for b in balls)
    assert sorted(round(float(b.mid.real), 12) for b in balls) == [-1.414213562373, 1.414213562373]


def test_identify_rational_root():
    ball = certified_roots([-1, 0, 4], 128)[0]
    annihilator = MultiPoly.from_univariate([-1, 0, 4], "z")
    assert identify(ball, annihilator) in (Fraction(1, 2), Fraction(-1, 2))
    irrational = certified_roots([-2, 0, 1], 128)[0]
    assert identify(irrational, MultiPoly.from_univariate([-2, 0, 1], "z")) is None


def test_principal_root_exact():
    root = principal_root(AlgebraicCoefficient(GaussianRational(-1)), 2, 128)
    assert root.is_exact and root.exact == I
    assert principal_root(AlgebraicCoefficient(4), 2, 128).exact == 2


def test_principal_root_certified():
    root = principal_root(AlgebraicCoefficient(16), 8, 128)
    assert not root.is_exact
    assert abs(root.to_complex() - 2 ** 0.5) < 1e-12
    assert root.annihilator.univariate_coefficients() == [-16, 0, 0, 0, 0, 0, 0, 0, 1]
    assert root.value.radius < mp.mpf(2) ** -100


def test_algebraic_coefficient_json():
    exact = AlgebraicCoefficient(GaussianRational(Fraction(1, 2), -3))
    assert AlgebraicCoefficient.from_json(exact.to_json()) == exact
    data = principal_root(AlgebraicCoefficient(2), 2, 128).to_json()
    assert data["kind"] == "certified"
    assert [c["re"] for c in data["minimal_polynomial"]] == ["-2", "0", "1"]


def test_solve_with_exact_gaussian_points(poly):
    gb = buchberger(Ideal([poly("x^2 + 1", XY), poly("y - x", XY)], XY))
    points = solve_zero_dimensional(gb, 128)
    assert len(points) == 2
    assert all(p["x"].is_exact and p["y"].is_exact for p in points)
    assert {p["x"].exact for p in points} == {I, -I}
    assert all(p["x"] == p["y"].exact for p in points)


def test_solve_with_irrational_points(poly):
    gb = buchberger(Ideal([poly("x^2 - 2", XY), poly("y - 1", XY)], XY))
    points = solve_zero_dimensional(gb, 128, coordinates=["x", "y"])
    assert len(points) == 2
    assert all(p["y"] == 1 for p in points)
    for p in points:
        assert not p["x"].is_exact
        assert p["x"].annihilator.univariate_coefficients() == [-2, 0, 1]
        assert abs(abs(p["x"].to_complex()) - 2 ** 0.5) < 1e-12


def test_solve_unit_ideal_has_no_points(poly):
    gb = buchberger(Ideal([poly("x", XY), poly("x - 1", XY)], XY))
    assert solve_zero_dimensional(gb, 128) == []
