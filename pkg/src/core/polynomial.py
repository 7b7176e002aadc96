"""
Sparse multivariate polynomials over Q(i) and the exact-algebra operations
built on them: derivative, evaluation, gcd, resultant and squarefree part.
"""

import heapq
from fractions import Fraction
from functools import reduce
from math import gcd as int_gcd
from typing import (Callable, Dict, Iterable, List, Mapping, Optional,
                    Sequence, Tuple, Union)

from src.core.errors import (DivisionByZero, MissingAssignment,
                             UnknownVariable, ZeroInput)
from src.core.gaussian import ONE, ZERO, GaussianRational, Number

Exponent = Tuple[int, ...]
Terms = Dict[Exponent, GaussianRational]


# Monomial order keys: a larger key means a larger monomial.

def lex_key(exp: Exponent) -> Exponent:
    return exp


def grlex_key(exp: Exponent) -> Tuple[int, Exponent]:
    return (sum(exp), exp)


def grevlex_key(exp: Exponent) -> Tuple[int, ...]:
    return (sum(exp),) + tuple(-e for e in reversed(exp))


def _lcm_int(a: int, b: int) -> int:
    return a * b // int_gcd(a, b)


class MultiPoly:
    """A polynomial with Gaussian-rational coefficients.

    Terms map exponent vectors (one entry per variable, in the order of
    ``variables``) to nonzero coefficients. Binary operations between
    polynomials over different variable lists embed both into the union
    of the lists, keeping the left operand's order first.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Optional[Mapping] = None) -> None:
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variables in {variables}")
        clean: Terms = {}
        nvars = len(variables)
        for exp, coeff in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} does not match variables {variables}")
            coeff = GaussianRational.coerce(coeff)
            if coeff:
                clean[exp] = coeff
        self.variables = variables
        self.terms = clean

    @classmethod
    def _raw(cls, variables: Tuple[str, ...], terms: Terms) -> "MultiPoly":
        # terms must already be clean
        poly = cls.__new__(cls)
        poly.variables = variables
        poly.terms = terms
        return poly

    # Constructors

    @staticmethod
    def zero(variables: Sequence[str] = ()) -> "MultiPoly":
        return MultiPoly._raw(tuple(variables), {})

    @staticmethod
    def constant(value: Number, variables: Sequence[str] = ()) -> "MultiPoly":
        variables = tuple(variables)
        value = GaussianRational.coerce(value)
        if not value:
            return MultiPoly._raw(variables, {})
        return MultiPoly._raw(variables, {(0,) * len(variables): value})

    @staticmethod
    def one(variables: Sequence[str] = ()) -> "MultiPoly":
        return MultiPoly.constant(ONE, variables)

    @staticmethod
    def variable(name: str, variables: Optional[Sequence[str]] = None) -> "MultiPoly":
        variables = tuple(variables) if variables is not None else (name,)
        if name not in variables:
            raise UnknownVariable(name)
        exp = tuple(1 if v == name else 0 for v in variables)
        return MultiPoly._raw(variables, {exp: ONE})

    @staticmethod
    def monomial(exp: Exponent, variables: Sequence[str],
                 coeff: Number = ONE) -> "MultiPoly":
        return MultiPoly(variables, {tuple(exp): coeff})

    # Structure

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self) -> GaussianRational:
        """Value of a constant polynomial.

        Raises:
            ValueError: If the polynomial is not constant
        """
        if not self.terms:
            return ZERO
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return next(iter(self.terms.values()))

    def index(self, v: str) -> int:
        try:
            return self.variables.index(v)
        except ValueError:
            raise UnknownVariable(v) from None

    def degree(self, v: str) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        k = self.index(v)
        return max((exp[k] for exp in self.terms), default=-1)

    def total_degree(self) -> int:
        return max((sum(exp) for exp in self.terms), default=-1)

    def support(self) -> Tuple[str, ...]:
        """Variables that actually occur, in variable order."""
        used = [False] * len(self.variables)
        for exp in self.terms:
            for k, e in enumerate(exp):
                if e:
                    used[k] = True
        return tuple(v for v, u in zip(self.variables, used) if u)

    def is_real(self) -> bool:
        return all(c.is_real() for c in self.terms.values())

    def leading_term(self, key: Callable = grlex_key) -> Tuple[Exponent, GaussianRational]:
        if not self.terms:
            raise ZeroInput("zero polynomial has no leading term")
        exp = max(self.terms, key=key)
        return exp, self.terms[exp]

    def leading_coefficient(self, key: Callable = grlex_key) -> GaussianRational:
        return self.leading_term(key)[1]

    # Variable bookkeeping

    def embed(self, variables: Sequence[str]) -> "MultiPoly":
        """Re-express the polynomial over another variable list.

        Raises:
            UnknownVariable: If a variable in use is missing from the target list
        """
        variables = tuple(variables)
        if variables == self.variables:
            return self
        positions = []
        for v in variables:
            positions.append(self.variables.index(v) if v in self.variables else None)
        missing = set(self.support()) - set(variables)
        if missing:
            raise UnknownVariable(", ".join(sorted(missing)))
        terms: Terms = {}
        for exp, coeff in self.terms.items():
            terms[tuple(exp[k] if k is not None else 0 for k in positions)] = coeff
        return MultiPoly._raw(variables, terms)

    def rename(self, mapping: Mapping[str, str]) -> "MultiPoly":
        variables = tuple(mapping.get(v, v) for v in self.variables)
        return MultiPoly(variables, self.terms)

    def _unified(self, other: "MultiPoly") -> Tuple["MultiPoly", "MultiPoly"]:
        if self.variables == other.variables:
            return self, other
        merged = self.variables + tuple(v for v in other.variables if v not in self.variables)
        return self.embed(merged), other.embed(merged)

    @staticmethod
    def _lift(value) -> "MultiPoly":
        if isinstance(value, MultiPoly):
            return value
        return MultiPoly.constant(value)

    # Arithmetic

    def __add__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            if not isinstance(other, (int, Fraction, GaussianRational)):
                return NotImplemented
            other = MultiPoly.constant(other, self.variables)
        a, b = self._unified(other)
        terms = dict(a.terms)
        for exp, coeff in b.terms.items():
            total = terms.get(exp)
            if total is None:
                terms[exp] = coeff
            else:
                total = total + coeff
                if total:
                    terms[exp] = total
                else:
                    del terms[exp]
        return MultiPoly._raw(a.variables, terms)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        if not isinstance(other, (MultiPoly, int, Fraction, GaussianRational)):
            return NotImplemented
        return self + (-MultiPoly._lift(other))

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def scale(self, factor: Number) -> "MultiPoly":
        factor = GaussianRational.coerce(factor)
        if not factor:
            return MultiPoly._raw(self.variables, {})
        if factor.is_one():
            return self
        return MultiPoly._raw(self.variables, {e: c * factor for e, c in self.terms.items()})

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            if not isinstance(other, (int, Fraction, GaussianRational)):
                return NotImplemented
            return self.scale(other)
        a, b = self._unified(other)
        if len(a.terms) > len(b.terms):
            a, b = b, a
        terms: Terms = {}
        for ea, ca in a.terms.items():
            for eb, cb in b.terms.items():
                exp = tuple(x + y for x, y in zip(ea, eb))
                total = terms.get(exp)
                terms[exp] = ca * cb if total is None else total + ca * cb
        return MultiPoly._raw(a.variables, {e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other) -> "MultiPoly":
        """Division by a nonzero scalar or a constant polynomial."""
        if isinstance(other, MultiPoly):
            if not other.is_constant():
                return NotImplemented
            other = other.constant_value()
        other = GaussianRational.coerce(other)
        if not other:
            raise DivisionByZero("polynomial divided by zero")
        return self.scale(other.inverse())

    def __pow__(self, exponent: int) -> "MultiPoly":
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = MultiPoly.one(self.variables)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def mul_monomial(self, exp: Exponent, coeff: GaussianRational = ONE) -> "MultiPoly":
        terms = {tuple(x + y for x, y in zip(e, exp)): c * coeff for e, c in self.terms.items()}
        return MultiPoly._raw(self.variables, terms)

    def normalized(self, key: Callable = grlex_key) -> "MultiPoly":
        """Scale so that the leading coefficient (for ``key``) is 1."""
        if not self.terms:
            return self
        lc = self.leading_coefficient(key)
        return self if lc.is_one() else self.scale(lc.inverse())

    def primitive(self) -> "MultiPoly":
        """Integer-coefficient scalar multiple for display.

        Clears denominators, removes the integer content and makes the
        graded-lex leading coefficient's first nonzero component positive.
        """
        if not self.terms:
            return self
        denominators = [c.re.denominator for c in self.terms.values()]
        denominators += [c.im.denominator for c in self.terms.values()]
        scale = reduce(_lcm_int, denominators, 1)
        parts = []
        for c in self.terms.values():
            parts.extend([int(c.re * scale), int(c.im * scale)])
        content = reduce(int_gcd, parts, 0) or 1
        lc = self.leading_coefficient()
        first = lc.re if lc.re else lc.im
        factor = Fraction(scale, content) * (1 if first > 0 else -1)
        return self.scale(factor)

    # Calculus and evaluation

    def derivative(self, v: str) -> "MultiPoly":
        """Formal partial derivative.

        Raises:
            UnknownVariable: If ``v`` is not a variable of the polynomial
        """
        k = self.index(v)
        terms: Terms = {}
        for exp, coeff in self.terms.items():
            e = exp[k]
            if e:
                terms[exp[:k] + (e - 1,) + exp[k + 1:]] = coeff * e
        return MultiPoly._raw(self.variables, terms)

    def evaluate(self, assignment: Mapping[str, Number]) -> GaussianRational:
        """Exact value at a point.

        Raises:
            MissingAssignment: If a used variable has no value
        """
        missing = [v for v in self.support() if v not in assignment]
        if missing:
            raise MissingAssignment(", ".join(missing))
        values = [GaussianRational.coerce(assignment[v]) if v in assignment else ZERO
                  for v in self.variables]
        powers: List[Dict[int, GaussianRational]] = [{0: ONE} for _ in values]
        total = ZERO
        for exp, coeff in self.terms.items():
            term = coeff
            for k, e in enumerate(exp):
                if e:
                    cache = powers[k]
                    if e not in cache:
                        cache[e] = values[k] ** e
                    term = term * cache[e]
            total = total + term
        return total

    def substitute(self, mapping: Mapping[str, Union["MultiPoly", Number]],
                   variables: Optional[Sequence[str]] = None) -> "MultiPoly":
        """Replace variables by polynomials or scalars.

        Args:
            mapping: Replacement for each substituted variable
            variables: Variable list of the result; defaults to the kept
                variables followed by those of the replacements

        Returns:
            The composed polynomial
        """
        kept = [v for v in self.variables if v not in mapping]
        if variables is None:
            target = list(kept)
            for value in mapping.values():
                if isinstance(value, MultiPoly):
                    target.extend(v for v in value.variables if v not in target)
            variables = tuple(target)
        variables = tuple(variables)
        replacements: Dict[int, MultiPoly] = {}
        for k, v in enumerate(self.variables):
            if v in mapping:
                value = mapping[v]
                if isinstance(value, MultiPoly):
                    replacements[k] = value.embed(variables)
                else:
                    replacements[k] = MultiPoly.constant(value, variables)
        kept_positions = [(k, variables.index(v)) for k, v in enumerate(self.variables)
                          if v not in mapping]
        powers: Dict[Tuple[int, int], MultiPoly] = {}
        result = MultiPoly.zero(variables)
        for exp, coeff in self.terms.items():
            mono = [0] * len(variables)
            for k, target_k in kept_positions:
                mono[target_k] = exp[k]
            term = MultiPoly._raw(variables, {tuple(mono): coeff})
            for k, replacement in replacements.items():
                e = exp[k]
                if e:
                    if (k, e) not in powers:
                        powers[(k, e)] = replacement ** e
                    term = term * powers[(k, e)]
            result = result + term
        return result

    def coefficients_in(self, v: str) -> Dict[int, "MultiPoly"]:
        """Split into coefficients of powers of ``v``.

        Coefficients keep the full variable list, with ``v`` absent.
        """
        k = self.index(v)
        split: Dict[int, Terms] = {}
        for exp, coeff in self.terms.items():
            split.setdefault(exp[k], {})[exp[:k] + (0,) + exp[k + 1:]] = coeff
        return {d: MultiPoly._raw(self.variables, t) for d, t in split.items()}

    def univariate_coefficients(self, v: Optional[str] = None) -> List[GaussianRational]:
        """Coefficient list [c0, c1, ..., cd] of a univariate polynomial."""
        if v is None:
            support = self.support()
            if len(support) > 1:
                raise ValueError(f"{self} is not univariate")
            v = support[0] if support else (self.variables[0] if self.variables else None)
        if not self.terms:
            return []
        if v is None:
            return [self.constant_value()]
        k = self.index(v)
        coeffs = [ZERO] * (self.degree(v) + 1)
        for exp, coeff in self.terms.items():
            if any(e for j, e in enumerate(exp) if j != k):
                raise ValueError(f"{self} is not univariate in {v}")
            coeffs[exp[k]] = coeff
        return coeffs

    @staticmethod
    def from_univariate(coeffs: Sequence[Number], v: str,
                        variables: Optional[Sequence[str]] = None) -> "MultiPoly":
        variables = tuple(variables) if variables is not None else (v,)
        k = variables.index(v)
        terms = {}
        for d, c in enumerate(coeffs):
            exp = [0] * len(variables)
            exp[k] = d
            terms[tuple(exp)] = c
        return MultiPoly(variables, terms)

    def split_monomial_content(self) -> Tuple[Exponent, "MultiPoly"]:
        """Factor out the largest monomial dividing every term."""
        if not self.terms:
            return (0,) * len(self.variables), self
        low = tuple(min(col) for col in zip(*self.terms))
        if not any(low):
            return low, self
        terms = {tuple(e - m for e, m in zip(exp, low)): c for exp, c in self.terms.items()}
        return low, MultiPoly._raw(self.variables, terms)

    # Comparison and output

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = MultiPoly.constant(other, self.variables)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._unified(other)
        return a.terms == b.terms

    def __hash__(self) -> int:
        items = []
        for exp, coeff in self.terms.items():
            items.append((tuple((v, e) for v, e in zip(self.variables, exp) if e), coeff))
        return hash(frozenset(items))

    def __repr__(self) -> str:
        return f"MultiPoly({self.variables}, {str(self)!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exp in sorted(self.terms, key=grlex_key, reverse=True):
            coeff = self.terms[exp]
            mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in zip(self.variables, exp) if e)
            if coeff.is_real():
                sign = "-" if coeff.re < 0 else "+"
                magnitude = abs(coeff.re)
                body = str(magnitude) if not mono else (mono if magnitude == 1 else f"{magnitude}*{mono}")
            else:
                sign = "+"
                body = f"{coeff}" if not mono else f"{coeff}*{mono}"
                if not coeff.re and coeff.im < 0:
                    sign = "-"
                    body = str(-coeff) if not mono else f"{-coeff}*{mono}"
            pieces.append((sign, body))
        text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def to_json(self) -> dict:
        return {
            "variables": list(self.variables),
            "terms": [[list(exp), coeff.to_json()]
                      for exp, coeff in sorted(self.terms.items(),
                                               key=lambda item: grlex_key(item[0]),
                                               reverse=True)],
            "text": str(self.primitive()) if self.terms and len(self.terms) > 1 else str(self),
        }

    @staticmethod
    def from_json(data: dict) -> "MultiPoly":
        return MultiPoly(data["variables"],
                         {tuple(exp): GaussianRational.from_json(c) for exp, c in data["terms"]})


# Division

def exact_quotient(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Quotient a/b when b divides a exactly.

    Raises:
        DivisionByZero: If b is zero
        ArithmeticError: If the division leaves a remainder
    """
    a, b = a._unified(b)
    if b.is_zero():
        raise DivisionByZero("exact division by the zero polynomial")
    if b.is_constant():
        return a / b.constant_value()
    lead_exp, lead_coeff = b.leading_term(lex_key)
    inverse = lead_coeff.inverse()
    rest = [(exp, coeff) for exp, coeff in b.terms.items() if exp != lead_exp]
    remainder = dict(a.terms)
    heap = [tuple(-e for e in exp) for exp in remainder]
    heapq.heapify(heap)
    quotient: Terms = {}
    while heap:
        exp = tuple(-e for e in heapq.heappop(heap))
        coeff = remainder.pop(exp, None)
        if coeff is None:
            continue
        shift = tuple(x - y for x, y in zip(exp, lead_exp))
        if any(s < 0 for s in shift):
            raise ArithmeticError("polynomial division is not exact")
        factor = coeff * inverse
        quotient[shift] = factor
        for bexp, bcoeff in rest:
            target = tuple(x + y for x, y in zip(bexp, shift))
            current = remainder.get(target)
            if current is None:
                remainder[target] = -(factor * bcoeff)
                heapq.heappush(heap, tuple(-e for e in target))
            else:
                current = current - factor * bcoeff
                if current:
                    remainder[target] = current
                else:
                    del remainder[target]
    return MultiPoly._raw(a.variables, quotient)


def divides(b: MultiPoly, a: MultiPoly) -> bool:
    try:
        exact_quotient(a, b)
    except ArithmeticError:
        return False
    return True


def _univariate_divmod(a: MultiPoly, b: MultiPoly, v: str) -> Tuple[MultiPoly, MultiPoly]:
    # field division for polynomials that involve only v
    db = b.degree(v)
    k = b.index(v)
    lead = b.coefficients_in(v)[db].constant_value().inverse()
    quotient = MultiPoly.zero(a.variables)
    remainder = a
    while not remainder.is_zero() and remainder.degree(v) >= db:
        dr = remainder.degree(v)
        coeff = remainder.coefficients_in(v)[dr].constant_value() * lead
        exp = [0] * len(a.variables)
        exp[k] = dr - db
        term = MultiPoly._raw(a.variables, {tuple(exp): coeff})
        quotient = quotient + term
        remainder = remainder - term * b
    return quotient, remainder


def pseudo_remainder(a: MultiPoly, b: MultiPoly, v: str) -> MultiPoly:
    """prem_v(a, b) = lc(b)^(deg a - deg b + 1) a mod b, computed in R[v].

    Raises:
        ZeroInput: If b is zero
    """
    a, b = a._unified(b)
    if b.is_zero():
        raise ZeroInput("pseudo-remainder by zero")
    bs = b.coefficients_in(v)
    db = max(bs)
    lb = bs[db]
    rs = a.coefficients_in(v)
    e = max(rs, default=-1) - db + 1
    if e <= 0:
        return a
    while rs and max(rs) >= db:
        dr = max(rs)
        lr = rs.pop(dr)
        shift = dr - db
        rs = {d: c * lb for d, c in rs.items()}
        for d, c in bs.items():
            if d == db:
                continue
            target = d + shift
            value = rs.get(target, MultiPoly.zero(a.variables)) - lr * c
            if value.is_zero():
                rs.pop(target, None)
            else:
                rs[target] = value
        e -= 1
    result = _from_coefficients(rs, v, a.variables)
    return result * (lb ** e) if e else result


def _from_coefficients(coeffs: Mapping[int, MultiPoly], v: str,
                       variables: Tuple[str, ...]) -> MultiPoly:
    k = variables.index(v)
    terms: Terms = {}
    for d, c in coeffs.items():
        for exp, coeff in c.terms.items():
            terms[exp[:k] + (d,) + exp[k + 1:]] = coeff
    return MultiPoly._raw(variables, terms)


# GCD

def poly_gcd(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Greatest common divisor, normalized to graded-lex leading coefficient 1.

    gcd(0, 0) is 0. Multivariate inputs use content/primitive-part
    recursion with a primitive pseudo-remainder sequence in one variable.
    """
    a, b = a._unified(b)
    if a.is_zero():
        return b.normalized()
    if b.is_zero():
        return a.normalized()
    low_a, a1 = a.split_monomial_content()
    low_b, b1 = b.split_monomial_content()
    low = tuple(min(x, y) for x, y in zip(low_a, low_b))
    g = _gcd_recursive(a1, b1)
    if any(low):
        g = g.mul_monomial(low)
    return g.normalized()


def _gcd_recursive(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    one = MultiPoly.one(a.variables)
    if a.is_zero():
        return b.normalized()
    if b.is_zero():
        return a.normalized()
    if a.is_constant() or b.is_constant():
        return one
    sa, sb = set(a.support()), set(b.support())
    for v in a.variables:
        if v in sa and v not in sb:
            return _gcd_recursive(content(a, v), b)
        if v in sb and v not in sa:
            return _gcd_recursive(a, content(b, v))
    if len(sa) == 1:
        v = next(iter(sa))
        while not b.is_zero():
            a, b = b, _univariate_divmod(a, b, v)[1]
        return a.normalized()
    v = min(sa, key=lambda name: (a.degree(name) + b.degree(name), a.variables.index(name)))
    ca, cb = content(a, v), content(b, v)
    c = _gcd_recursive(ca, cb)
    pa, pb = exact_quotient(a, ca), exact_quotient(b, cb)
    if pa.degree(v) < pb.degree(v):
        pa, pb = pb, pa
    while not pb.is_zero():
        if pb.degree(v) == 0:
            return c
        r = pseudo_remainder(pa, pb, v)
        pa, pb = pb, (primitive_part(r, v) if not r.is_zero() else r)
    return (c * primitive_part(pa, v)).normalized()


def content(f: MultiPoly, v: str) -> MultiPoly:
    """gcd of the coefficients of f with respect to ``v``."""
    coeffs = sorted(f.coefficients_in(v).values(), key=lambda c: len(c.terms))
    result = MultiPoly.zero(f.variables)
    for c in coeffs:
        result = poly_gcd(result, c)
        if result.is_constant() and not result.is_zero():
            return MultiPoly.one(f.variables)
    return result


def primitive_part(f: MultiPoly, v: str) -> MultiPoly:
    if f.is_zero():
        return f
    return exact_quotient(f, content(f, v)).normalized()


def squarefree_part(f: MultiPoly, v: str) -> MultiPoly:
    """f / gcd(f, df/dv), normalized.

    Raises:
        ZeroInput: If f is zero
    """
    if f.is_zero():
        raise ZeroInput("squarefree part of the zero polynomial")
    g = poly_gcd(f, f.derivative(v))
    return exact_quotient(f, g).normalized()


# Resultant

def resultant(a: MultiPoly, b: MultiPoly, v: str) -> MultiPoly:
    """Resultant with respect to ``v`` by the subresultant algorithm.

    Raises:
        ZeroInput: If either input is zero
    """
    a, b = a._unified(b)
    if a.is_zero() or b.is_zero():
        raise ZeroInput("resultant of a zero polynomial")
    da, db = a.degree(v), b.degree(v)
    sign = 1
    if da < db:
        a, b, da, db = b, a, db, da
        if da % 2 and db % 2:
            sign = -1
    if db == 0:
        return (b ** da).scale(sign)
    g = MultiPoly.one(a.variables)
    h = MultiPoly.one(a.variables)
    while True:
        delta = da - db
        if da % 2 and db % 2:
            sign = -sign
        r = pseudo_remainder(a, b, v)
        if r.is_zero():
            return MultiPoly.zero(a.variables)
        a = b
        b = exact_quotient(r, g * h ** delta)
        g = a.coefficients_in(v)[a.degree(v)]
        if delta == 1:
            h = g
        elif delta > 1:
            h = exact_quotient(g ** delta, h ** (delta - 1))
        da, db = a.degree(v), b.degree(v)
        if db == 0:
            lead = b.coefficients_in(v)[0]
            h = exact_quotient(lead ** da, h ** (da - 1))
            return h.scale(sign)


def lcm(polys: Iterable[MultiPoly]) -> MultiPoly:
    """Least common multiple, normalized."""
    result: Optional[MultiPoly] = None
    for p in polys:
        if result is None:
            result = p.normalized()
            continue
        result, p = result._unified(p)
        result = exact_quotient(result * p, poly_gcd(result, p)).normalized()
    if result is None:
        raise ZeroInput("lcm of an empty list")
    return result
