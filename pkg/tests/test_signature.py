"""Tests for signature varieties, equivalence and symmetry counts."""

from fractions import Fraction

import pytest

from src.core.errors import (DivisionByZero, HessianZero, ImproperIdeal, NameMismatch,
                             NotZeroDimensional)
from src.core.groebner import Ideal
from src.core.parser import parse_polynomial
from src.core.rational_function import RationalFunction
from src.core.signature import (SignatureVariety, binary_signature, count_symmetries,
                                equivalence_test, probe_images, signature_dimension, signature_ideal,
                                sum_of_powers_conditions, sum_of_powers_scalings,
                                symmetry_count, ternary_signature)
from src.core.ternary_forms import absolute_invariants
from src.utils.constants import DEFAULT_TERNARY_PROBES, THIRD_ORDER_NAMES


def names_poly(text):
    return parse_polynomial(text, THIRD_ORDER_NAMES)


def variety(texts, dimension):
    return SignatureVariety(THIRD_ORDER_NAMES, [names_poly(t) for t in texts], dimension)


def third_order(form):
    invariants = absolute_invariants(form, THIRD_ORDER_NAMES)
    return [invariants[name] for name in THIRD_ORDER_NAMES]


def test_constant_invariants_give_a_point():
    values = [RationalFunction.constant(Fraction(4, 3)), RationalFunction.constant(2)]
    ideal = signature_ideal(values, ("I1", "I2"))
    assert ideal.variables == ("I1", "I2")
    assert ideal.generators == [parse_polynomial("I1 - 4/3", ("I1", "I2")),
                                parse_polynomial("I2 - 2", ("I1", "I2"))]


def test_signature_of_parametrized_curve(poly):
    # I1 = p, I2 = p^2 traces the parabola I2 = I1^2
    values = [RationalFunction(poly("p")), RationalFunction(poly("p^2"))]
    ideal = signature_ideal(values, ("I1", "I2"))
    assert ideal.generators == [parse_polynomial("I1^2 - I2", ("I1", "I2"))] or \
        ideal.generators == [parse_polynomial("I2 - I1^2", ("I1", "I2"))]


def test_signature_ideal_checks_lengths():
    with pytest.raises(ValueError):
        signature_ideal([RationalFunction.constant(1)], ("I1", "I2"))


def test_signature_dimension():
    names = ("I1", "I2", "I3")
    assert signature_dimension(Ideal([names_poly("I1 + 1/6")], names)) == 2
    with pytest.raises(ImproperIdeal):
        signature_dimension(Ideal([names_poly("1")], names))


def test_equivalence_by_mutual_containment():
    cusp = variety(["I2 + 15/2*I3 - 31/6", "I1 + 1/6"], 1)
    same = variety(["I1 + 1/6", "I2 + 15/2*I3 - 31/6"], 1)
    fermat = variety(["I1 + 1/6"], 2)
    assert equivalence_test(cusp, same) == "Equivalent"
    assert equivalence_test(cusp, same, "real") == "Inconclusive"
    assert equivalence_test(cusp, fermat) == "Inequivalent"
    assert cusp.symmetry_group_dimension == 1
    assert fermat.symmetry_group_dimension == 0


def test_equivalence_needs_same_names():
    a = variety(["I1 + 1/6"], 2)
    b = SignatureVariety(("J", "K"), [parse_polynomial("K - 1", ("J", "K"))], 1, 1)
    with pytest.raises(NameMismatch):
        equivalence_test(a, b)


def test_variety_json_uses_integer_generators():
    data = variety(["I1 + 1/6"], 2).to_json()
    assert data["generators"] == ["6*I1 + 1"]
    assert data["dimension"] == 2
    assert data["symmetry_group_dimension"] == 0


def test_binary_signature_needs_nonzero_hessian(binary):
    with pytest.raises(HessianZero):
        binary_signature(binary("p^3", 3))


def test_probe_at_pole(ternary):
    values = third_order(ternary("p^3 + q^3 + 1", 3))
    with pytest.raises(DivisionByZero):
        symmetry_count(values, (1, 0))


def test_count_skips_bad_probes(poly):
    values = [RationalFunction(poly("p^2")), RationalFunction(poly("q^2"), poly("p"))]
    result = count_symmetries(values, [(0, 2), (1, 2)])
    assert result.count == 4
    assert result.probe_point == (1, 2)
    assert result.radical_verified
    assert len(result.diagnostics) == 1


def test_count_removes_multiplicities(poly):
    values = [RationalFunction(poly("p^2")), RationalFunction(poly("q^2"))]
    result = symmetry_count(values, (0, 1))
    assert result.count == 2
    assert result.radical_verified
    assert any("multiplicities" in note for note in result.diagnostics)


def test_count_fails_when_every_probe_fails(poly):
    values = [RationalFunction(poly("p"))]
    with pytest.raises(NotZeroDimensional):
        count_symmetries(values, [(1, 2)])
    with pytest.raises(NotZeroDimensional):
        count_symmetries(values, [])


def test_sum_of_powers_scalings():
    scalings = sum_of_powers_scalings(4)
    assert scalings["I7"] == 6
    assert scalings["I2"] == 3
    with pytest.raises(ValueError):
        sum_of_powers_conditions(3)


@pytest.mark.slow
def test_signature_of_cuspidal_cubic(ternary):
    result = ternary_signature(ternary("p^3 - q^2", 3))
    expected = variety(["I2 + 15/2*I3 - 31/6", "I1 + 1/6"], 1)
    assert result.dimension == 1
    assert equivalence_test(result, expected) == "Equivalent"


@pytest.mark.slow
def test_signature_of_fermat_cubic(ternary):
    result = ternary_signature(ternary("p^3 + q^3 + 1", 3))
    assert result.dimension == 2
    assert result.symmetry_group_dimension == 0
    assert [str(g) for g in result.generators] == ["I1 + 1/6"]


@pytest.mark.slow
@pytest.mark.parametrize("text, expected", [
    ("p^2*(p+1) - q^2", 6),
    ("p^3 + p - q^2", 36),
    ("p^3 + 3*p + 1 - q^2", 18),
])
def test_symmetry_counts(ternary, text, expected):
    result = symmetry_count(third_order(ternary(text, 3)), (1, 2))
    assert result.count == expected
    assert result.radical_verified


@pytest.mark.slow
def test_fermat_cubic_count(ternary):
    values = third_order(ternary("p^3 + q^3 + 1", 3))
    assert count_symmetries(values, DEFAULT_TERNARY_PROBES).count == 54


@pytest.mark.slow
def test_probe_images_include_the_probe(ternary):
    values = third_order(ternary("p^2*(p+1) - q^2", 3))
    points = probe_images(values, (1, 2))
    assert len(points) == 6
    assert any(point["p"] == 1 and point["q"] == 2 for point in points)


@pytest.mark.slow
def test_equivalent_nodal_cubics(ternary):
    a = ternary_signature(ternary("p^2*(p+1) - q^2", 3))
    b = ternary_signature(ternary("p^2*(p+4) - q^2", 3))
    assert equivalence_test(a, b) == "Equivalent"


@pytest.mark.slow
def test_sum_of_powers_relations():
    report = sum_of_powers_conditions(4)
    assert report.all_hold
    assert report.to_json()["all_hold"] is True


@pytest.mark.slow
def test_binary_signature_of_cubic(binary):
    cubic = binary_signature(binary("p^3 + 2*p + 1", 3))
    assert cubic.dimension == 1
    assert cubic.symmetry_group_dimension == 0
    assert cubic.basis().contains(parse_polynomial("K + 3/2", ("J", "K")))
