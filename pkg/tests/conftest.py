import pytest

from src.core.binary_forms import BinaryForm
from src.core.parser import parse_polynomial
from src.core.ternary_forms import TernaryForm
from src.utils.constants import BINARY_VARIABLE, TERNARY_VARIABLES


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False,
                     help="run the long Groebner eliminations")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def poly():
    """Build a polynomial from text; variables default to (p, q)."""
    def build(text, variables=TERNARY_VARIABLES):
        return parse_polynomial(text, variables)
    return build


@pytest.fixture
def binary():
    def build(text, degree, weight=0):
        return BinaryForm(parse_polynomial(text, (BINARY_VARIABLE,)), degree, weight)
    return build


@pytest.fixture
def ternary():
    def build(text, degree):
        return TernaryForm(parse_polynomial(text, TERNARY_VARIABLES), degree)
    return build
