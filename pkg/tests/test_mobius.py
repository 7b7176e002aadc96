"""Tests for linear-fractional transformations."""

from fractions import Fraction

import pytest

from src.core.errors import NotLinearFractional
from src.core.gaussian import I, GaussianRational
from src.core.mobius import Mobius, real_symmetries, to_linear_fractional
from src.core.parser import parse_rational_function


def lf(text):
    return to_linear_fractional(parse_rational_function(text, ("p",)))


def test_degenerate_map_rejected():
    with pytest.raises(NotLinearFractional):
        Mobius(1, 1, 1, 1)


def test_canonical_scaling_keeps_representative():
    m = lf("i*(p+1)/(p-1)")
    assert [c.exact for c in m.representative] == [I, I, 1, -1]
    assert m.alpha == 1
    assert m.beta == 1
    assert m.gamma == GaussianRational(0, -1)
    assert m.delta == I


def test_apply_and_infinity():
    swap = Mobius(0, 1, 1, 0)
    assert swap.apply(0) is None
    assert swap.apply(2) == Fraction(1, 2)
    assert Mobius(2, 1, 1, 3).apply(0) == Fraction(1, 3)
    assert str(swap) == "(1)/(p)"


def test_compose_and_inverse():
    ip = Mobius(I, 0, 0, 1)
    assert ip.compose(ip) == Mobius(-1, 0, 0, 1)
    m = Mobius(2, 1, 1, 3)
    assert m.compose(m.inverse()).is_identity()


def test_to_linear_fractional_rejects_other_maps():
    for text in ("p^2", "(p^2+1)/(p-1)", "3"):
        with pytest.raises(NotLinearFractional):
            lf(text)


def test_round_trip_through_rational_function():
    m = lf("(2*p+1)/(p+3)")
    assert m.to_rational_function() == parse_rational_function("(2*p+1)/(p+3)", ("p",))
    assert Mobius.from_json(m.to_json()) == m


def test_real_filter():
    maps = [Mobius(I, 0, 0, 1), Mobius(-1, 0, 0, 1), Mobius(0, 1, 1, 0)]
    assert real_symmetries(maps) == maps[1:]
