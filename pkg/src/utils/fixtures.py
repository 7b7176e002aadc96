"""
Reference forms with known symmetry groups.
"""

from typing import Dict, List, Tuple

from src.core.gaussian import GaussianRational
from src.core.parser import parse_polynomial
from src.core.polynomial import MultiPoly

# Klein's octahedral forms in (x, y); K8 = K4 * conj(K4).
K6_TEXT = "x^5*y - x*y^5"
K8_TEXT = "x^8 + 14*x^4*y^4 + y^8"
K12_TEXT = "x^12 - 33*x^8*y^4 - 33*x^4*y^8 + y^12"

# Forms over Q(i)[s] with s^2 = RADICAL_SQUARES[name]
RADICAL_VARIABLE = "s"
EXTENSION_VARIABLES = ("x", "y", RADICAL_VARIABLE)
K4_TEXT = "x^4 - 2*i*s*x^2*y^2 + y^4"
K4_BAR_TEXT = "x^4 + 2*i*s*x^2*y^2 + y^4"
RADICAL_SQUARES = {"K4": 3, "K4bar": 3, "L12": 5, "L12tilde": 5}

# Inhomogenized form, degree and the order of its projective symmetry group
QUINTIC_TABLE: List[Tuple[str, int, int]] = [
    ("p^5 + 1", 5, 10),
    ("p^5 + p", 5, 4),
    ("p^5 + p^2", 5, 3),
    ("p^5 + p^3", 5, 2),
    ("p^5 + p^2 + 1", 5, 1),
    ("p^5 - 4*p - 2", 5, 1),
]

OCTAHEDRAL_TABLE: List[Tuple[str, int, int]] = [
    ("p^5 + p", 6, 24),
    ("p^8 + 14*p^4 + 1", 8, 24),
    ("p^12 - 33*p^8 - 33*p^4 + 1", 12, 24),
]


def klein_form(text: str) -> MultiPoly:
    return parse_polynomial(text, ("x", "y"))


def inhomogenize(form: MultiPoly, variable: str = "p") -> MultiPoly:
    """f(p) = F(p, 1)."""
    return form.substitute({"y": 1}).rename({"x": variable}).embed((variable,))


def klein_forms() -> Dict[str, MultiPoly]:
    return {"K6": klein_form(K6_TEXT), "K8": klein_form(K8_TEXT), "K12": klein_form(K12_TEXT)}


def reduce_radical(form: MultiPoly, square: int) -> MultiPoly:
    """Rewrite s^2 = square so that s occurs at most linearly."""
    k = form.index(RADICAL_VARIABLE)
    terms: Dict[Tuple[int, ...], GaussianRational] = {}
    for exp, coeff in form.terms.items():
        reduced = list(exp)
        reduced[k] = exp[k] % 2
        key = tuple(reduced)
        value = coeff * square ** (exp[k] // 2)
        terms[key] = terms[key] + value if key in terms else value
    return MultiPoly(form.variables, terms)


def extension_forms() -> Dict[str, MultiPoly]:
    """K4, its conjugate and the icosahedral pair L12 = 5 K12 +- 22 s K6^2 over Q(i)[s]."""
    klein = {name: f.embed(EXTENSION_VARIABLES) for name, f in klein_forms().items()}
    s = MultiPoly.variable(RADICAL_VARIABLE, EXTENSION_VARIABLES)
    return {
        "K4": parse_polynomial(K4_TEXT, EXTENSION_VARIABLES),
        "K4bar": parse_polynomial(K4_BAR_TEXT, EXTENSION_VARIABLES),
        "L12": s * klein["K6"] ** 2 * 22 + klein["K12"] * 5,
        "L12tilde": klein["K12"] * 5 - s * klein["K6"] ** 2 * 22,
    }
