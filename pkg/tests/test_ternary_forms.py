"""Tests for Q-functions, co-forms, relative and absolute invariants."""

import random
from fractions import Fraction

import pytest

from src.core.errors import (HessianDegenerate, InvariantConstructionError, OutOfRange,
                             RankTooHigh, UnknownVariable)
from src.core.parser import parse_polynomial
from src.core.polynomial import MultiPoly
from src.core.rational_function import RationalFunction
from src.core.ternary_forms import (JET_VARIABLES, Q_VARIABLES, TernaryForm, TernaryInvariants,
                                    _symbolic_invariant, absolute_invariants, co_form,
                                    q_function, relative_invariants, restrict)
from src.core.transvectants import BinaryCoForm, WeightedFunction, falling_factorial, transvectant
from src.utils.constants import THIRD_ORDER_NAMES


def symbols(text):
    return parse_polynomial(text, Q_VARIABLES)


def swapped(body):
    mapping = {name: f"Q{name[2]}{name[1]}" for name in Q_VARIABLES}
    return body.rename(mapping).embed(Q_VARIABLES)


def proportional(a, b):
    exp, coeff = next(iter(b.terms.items()))
    ratio = a.terms.get(exp)
    return ratio is not None and a == b * (ratio / coeff)


def test_falling_factorial():
    assert falling_factorial(5, 2) == 20
    assert falling_factorial(7, 0) == 1
    assert falling_factorial(2, 3) == 0


def test_transvectant_of_quadratic_is_discriminant():
    a, b, c = (WeightedFunction(symbols(name)) for name in ("Q20", "Q11", "Q02"))
    quadratic = BinaryCoForm({(2, 0): a, (1, 1): b * 2, (0, 2): c}, 2)
    value = transvectant(quadratic, quadratic, 2).invariant()
    assert value.body == symbols("8*Q20*Q02 - 8*Q11^2")
    assert value.weight == 2
    with pytest.raises(RankTooHigh):
        transvectant(quadratic, quadratic, 3)


def test_weighted_functions_refuse_mixed_prefactors():
    x = WeightedFunction(symbols("Q20"), Fraction(-4, 3), 0)
    y = WeightedFunction(symbols("Q02"), Fraction(-2, 3), 0)
    with pytest.raises(InvariantConstructionError):
        x + y
    assert (x * y).u_exponent == -2


def test_q_function_range():
    assert q_function(2, 0, 3).u_exponent == Fraction(-4, 3)
    with pytest.raises(OutOfRange):
        q_function(3, 2, 4)
    with pytest.raises(OutOfRange):
        co_form(5, 3)


def test_q_values_of_pq(ternary):
    values = ternary("p*q", 3).q_values()
    pq = lambda text: parse_polynomial(text, ("p", "q"))
    assert values["Q20"] == pq("-2/3*q^2")
    assert values["Q02"] == pq("-2/3*p^2")
    assert values["Q11"] == pq("p*q/3")
    assert values["Q30"] == pq("4/9*q^3")
    assert values["Q12"] == pq("-2/9*p^2*q")


def test_second_order_invariant():
    assert _symbolic_invariant("d2").body == symbols("Q20*Q02 - Q11^2")


def test_third_order_invariants():
    m1 = symbols("Q30*Q12*Q02 - Q21^2*Q02 - Q30*Q03*Q11 + Q21*Q12*Q11"
                 " + Q21*Q03*Q20 - Q12^2*Q20")
    assert _symbolic_invariant("M1").body == m1
    A = symbols("Q30*Q12 - Q21^2")
    B = symbols("Q30*Q03 - Q21*Q12")
    C = symbols("Q21*Q03 - Q12^2")
    assert _symbolic_invariant("d3").body == B * B - A * C * 4


def test_m2_up_to_scale():
    m2 = symbols(
        "5*Q30^2*Q02^3 - 30*Q30*Q02^2*Q21*Q11 + 24*Q30*Q11^2*Q02*Q12 + 36*Q21^2*Q11^2*Q02"
        " + 9*Q21^2*Q02^2*Q20 - 4*Q30*Q11^3*Q03 - 36*Q21*Q11^3*Q12"
        " + 36*Q12^2*Q20*Q11^2 + 9*Q12^2*Q20^2*Q02 + 6*Q30*Q02^2*Q12*Q20"
        " - 6*Q30*Q20*Q02*Q03*Q11 - 54*Q21*Q20*Q02*Q12*Q11"
        " + 24*Q21*Q20*Q11^2*Q03 + 6*Q21*Q20^2*Q02*Q03 - 30*Q12*Q20^2*Q03*Q11"
        " + 5*Q03^2*Q20^3")
    assert len(m2.terms) == 16
    assert proportional(_symbolic_invariant("M2").body, m2)


def test_fourth_order_invariants():
    assert _symbolic_invariant("i").body == symbols("Q40*Q04 - 4*Q31*Q13 + 3*Q22^2")
    assert _symbolic_invariant("j").body == symbols(
        "Q40*Q22*Q04 + 2*Q31*Q22*Q13 - Q22^3 - Q40*Q13^2 - Q31^2*Q04")
    assert _symbolic_invariant("M3").body == symbols(
        "Q40*Q02^2 + 4*Q22*Q11^2 - 4*Q31*Q02*Q11 + 2*Q22*Q02*Q20 - 4*Q13*Q20*Q11 + Q04*Q20^2")


@pytest.mark.parametrize("name, sign", [
    ("d2", 1), ("d3", 1), ("i", 1), ("j", 1), ("M1", 1), ("M2", 1), ("M3", 1),
    ("M4", -1), ("M5", -1),
])
def test_parity_under_exchanging_p_and_q(name, sign):
    body = _symbolic_invariant(name).body
    assert swapped(body) == body * sign


def test_relative_invariant_prefactors():
    relative = relative_invariants(3, ["d2", "M4"])
    assert relative["d2"].u_exponent == Fraction(-8, 3)
    assert relative["d2"].weight == 2
    assert relative["M4"].weight == 9
    with pytest.raises(KeyError):
        relative_invariants(3, ["M9"])


def test_form_validation(ternary):
    with pytest.raises(ValueError):
        ternary("p*q", 2)
    with pytest.raises(ValueError):
        ternary("p^4 + q", 3)


def test_degenerate_form(ternary):
    with pytest.raises(HessianDegenerate):
        absolute_invariants(ternary("p^3 + 1", 3), THIRD_ORDER_NAMES)


def test_invariants_of_pq(ternary):
    invariants = absolute_invariants(ternary("p*q", 3), THIRD_ORDER_NAMES)
    assert invariants["I1"] == Fraction(4, 3)
    assert invariants["I2"] == Fraction(16, 3)
    assert invariants.I3 == Fraction(16, 9)


def test_invariants_of_cuspidal_cubic(ternary):
    invariants = absolute_invariants(ternary("p^3 - q^2", 3), THIRD_ORDER_NAMES)
    pq = lambda text: parse_polynomial(text, ("p", "q"))
    assert invariants["I1"] == Fraction(-1, 6)
    assert invariants["I2"] == RationalFunction(pq("36*p^3 + 5*q^2"), pq("6*p^3"))
    assert invariants["I3"] == RationalFunction(pq("-p^3 - q^2"), pq("9*p^3"))
    assert TernaryInvariants.from_json(invariants.to_json()).values == invariants.values


@pytest.mark.parametrize("n", [3, 4, 5])
def test_first_invariant_of_sum_of_powers(ternary, n):
    invariants = absolute_invariants(ternary(f"p^{n} + q^{n} + 1", n), ["I1"])
    assert invariants["I1"] == Fraction(-(n - 2) ** 2, n * (n - 1))


def test_restrict_constant_bodies(ternary):
    form = ternary("p*q + 1", 3)
    value, exponent = restrict(WeightedFunction(MultiPoly.constant(3, Q_VARIABLES)), form)
    assert value == 3
    assert exponent == 0
    assert restrict(WeightedFunction(MultiPoly.zero(Q_VARIABLES)), form)[0].is_zero()
    assert restrict(WeightedFunction(MultiPoly.constant(-2, JET_VARIABLES)), form)[0] == -2


def test_restrict_unknown_variables(ternary):
    with pytest.raises(UnknownVariable):
        restrict(WeightedFunction(MultiPoly.variable("w")), ternary("p*q + 1", 3))


def _random_cubic(rng):
    while True:
        terms = {(a, b): rng.randint(-4, 4) for a in range(4) for b in range(4 - a)}
        terms[(3, 0)] = terms[(3, 0)] or 1
        form = TernaryForm(MultiPoly(("p", "q"), terms), 3)
        try:
            absolute_invariants(form, ["I1"])
        except HessianDegenerate:
            continue
        return form


@pytest.mark.parametrize("seed", range(3))
def test_fourth_order_invariants_vanish_on_cubics(seed):
    form = _random_cubic(random.Random(seed))
    invariants = absolute_invariants(form, ["I4", "I5", "I6", "I8"])
    assert all(invariants[name].is_zero() for name in invariants.names)
    assert invariants.names == ["I4", "I5", "I6", "I8"]
