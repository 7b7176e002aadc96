"""
Buchberger Groebner engine over Q(i): reduced bases, normal forms,
elimination, dimension and zero-dimensional point counting.
"""

import heapq
from dataclasses import dataclass
from itertools import combinations
from logging import getLogger
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from typing_extensions import Literal

from src.core.errors import ImproperIdeal, NotZeroDimensional, ResourceLimit
from src.core.gaussian import ONE, GaussianRational
from src.core.polynomial import (Exponent, MultiPoly, grevlex_key, lex_key,
                                 poly_gcd)
from src.utils.constants import (DEFAULT_MAX_BASIS_SIZE, DEFAULT_MAX_DEGREE,
                                 DEFAULT_MAX_PAIRS, LOGGER_NAME)

logger = getLogger(LOGGER_NAME + ".groebner")

INFINITE = float("inf")

OrderKind = Literal["lex", "grevlex", "block"]


class MonomialOrder:
    """A monomial order on exponent vectors.

    ``block`` compares the first ``split`` exponents by grevlex and breaks
    ties with grevlex on the rest, so it eliminates the front variables.
    """

    def __init__(self, kind: OrderKind = "grevlex", split: int = 0) -> None:
        if kind not in ("lex", "grevlex", "block"):
            raise ValueError(f"unknown monomial order {kind!r}")
        self.kind = kind
        self.split = split if kind == "block" else 0

    @classmethod
    def lex(cls) -> "MonomialOrder":
        return cls("lex")

    @classmethod
    def grevlex(cls) -> "MonomialOrder":
        return cls("grevlex")

    @classmethod
    def block(cls, front: int) -> "MonomialOrder":
        return cls("block", front)

    def key(self, exp: Exponent) -> Tuple[int, ...]:
        if self.kind == "lex":
            return lex_key(exp)
        if self.kind == "grevlex":
            return grevlex_key(exp)
        return grevlex_key(exp[:self.split]) + grevlex_key(exp[self.split:])

    def __eq__(self, other) -> bool:
        return isinstance(other, MonomialOrder) and (self.kind, self.split) == (other.kind, other.split)

    def __hash__(self) -> int:
        return hash((self.kind, self.split))

    def __repr__(self) -> str:
        return f"MonomialOrder({self.kind!r}, {self.split})" if self.kind == "block" else f"MonomialOrder({self.kind!r})"


@dataclass(frozen=True)
class GroebnerLimits:
    """Caps on a single Buchberger run."""

    max_basis_size: int = DEFAULT_MAX_BASIS_SIZE
    max_degree: int = DEFAULT_MAX_DEGREE
    max_pairs: int = DEFAULT_MAX_PAIRS


class Ideal:
    """Generators together with the ambient variable list."""

    def __init__(self, generators: Iterable[MultiPoly], variables: Optional[Sequence[str]] = None) -> None:
        generators = list(generators)
        if variables is None:
            names: List[str] = []
            for g in generators:
                names.extend(v for v in g.variables if v not in names)
            variables = names
        self.variables = tuple(variables)
        self.generators = [g.embed(self.variables) for g in generators]

    def nonzero_generators(self) -> List[MultiPoly]:
        return [g for g in self.generators if not g.is_zero()]

    def __repr__(self) -> str:
        return f"Ideal([{', '.join(str(g) for g in self.generators)}], {self.variables})"


# Monomial helpers

def _divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x - y for x, y in zip(a, b))


def _add(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


class _Reducer:
    """A monic basis element split into leading monomial and tail."""

    __slots__ = ("lead", "tail", "poly")

    def __init__(self, poly: MultiPoly, order: MonomialOrder) -> None:
        lead = max(poly.terms, key=order.key)
        self.lead = lead
        self.tail = [(e, c) for e, c in poly.terms.items() if e != lead]
        self.poly = poly


def _reduce(f: MultiPoly, reducers: Sequence[_Reducer], order: MonomialOrder) -> MultiPoly:
    """Full reduction of f by monic reducers."""
    remainder: Dict[Exponent, GaussianRational] = dict(f.terms)
    heap = [tuple(-k for k in order.key(e)) + (e,) for e in remainder]
    heapq.heapify(heap)
    result: Dict[Exponent, GaussianRational] = {}
    while heap:
        exp = heapq.heappop(heap)[-1]
        coeff = remainder.pop(exp, None)
        if coeff is None:
            continue
        for g in reducers:
            if _divides(g.lead, exp):
                shift = _sub(exp, g.lead)
                for gexp, gcoeff in g.tail:
                    target = _add(gexp, shift)
                    current = remainder.get(target)
                    if current is None:
                        remainder[target] = -(coeff * gcoeff)
                        heapq.heappush(heap, tuple(-k for k in order.key(target)) + (target,))
                    else:
                        current = current - coeff * gcoeff
                        if current:
                            remainder[target] = current
                        else:
                            del remainder[target]
                break
        else:
            result[exp] = coeff
    return MultiPoly._raw(f.variables, result)


def _monic(f: MultiPoly, order: MonomialOrder) -> MultiPoly:
    lc = f.terms[max(f.terms, key=order.key)]
    return f if lc.is_one() else f.scale(lc.inverse())


def _spoly(f: _Reducer, g: _Reducer) -> MultiPoly:
    lcm = _lcm(f.lead, g.lead)
    return f.poly.mul_monomial(_sub(lcm, f.lead)) - g.poly.mul_monomial(_sub(lcm, g.lead))


def _update(leads: List[Exponent], pairs: Dict[Tuple[int, int], Tuple], lead: Exponent,
            order: MonomialOrder) -> Dict[Tuple[int, int], Tuple]:
    """Gebauer-Moeller pair update when a basis element with ``lead`` is appended."""
    new_index = len(leads)
    kept = {}
    for (i, j), key in pairs.items():
        l_ij = _lcm(leads[i], leads[j])
        if (not _divides(lead, l_ij) or l_ij == _lcm(leads[i], lead)
                or l_ij == _lcm(leads[j], lead)):
            kept[(i, j)] = key
    by_lcm: Dict[Exponent, List[int]] = {}
    for i, other in enumerate(leads):
        by_lcm.setdefault(_lcm(other, lead), []).append(i)
    minimal: List[Exponent] = []
    for l_new in sorted(by_lcm, key=order.key):
        if all(not _divides(m, l_new) for m in minimal):
            minimal.append(l_new)
    for l_new in minimal:
        # coprime leading monomials give an S-polynomial reducing to zero
        if not any(l_new == _add(leads[i], lead) for i in by_lcm[l_new]):
            kept[(min(by_lcm[l_new]), new_index)] = order.key(l_new)
    return kept


def buchberger(ideal: Ideal, order: Optional[MonomialOrder] = None,
               limits: Optional[GroebnerLimits] = None) -> "GroebnerBasis":
    """Reduced Groebner basis with the normal selection strategy.

    Args:
        ideal: Generators and ambient variables
        order: Monomial order, grevlex by default
        limits: Resource caps

    Returns:
        The unique reduced Groebner basis

    Raises:
        ResourceLimit: If a cap is exceeded
    """
    order = order or MonomialOrder.grevlex()
    limits = limits or GroebnerLimits()
    variables = ideal.variables
    generators = ideal.nonzero_generators()
    if not generators:
        return GroebnerBasis([], order, variables)

    basis: List[_Reducer] = []
    leads: List[Exponent] = []
    pairs: Dict[Tuple[int, int], Tuple] = {}

    def add(poly: MultiPoly) -> bool:
        poly = _monic(poly, order)
        if poly.total_degree() > limits.max_degree:
            raise ResourceLimit(f"basis element of degree {poly.total_degree()} exceeds "
                                f"max_degree={limits.max_degree}")
        if len(basis) >= limits.max_basis_size:
            raise ResourceLimit(f"basis size exceeds max_basis_size={limits.max_basis_size}")
        reducer = _Reducer(poly, order)
        nonlocal pairs
        pairs = _update(leads, pairs, reducer.lead, order)
        basis.append(reducer)
        leads.append(reducer.lead)
        return poly.is_constant()

    for g in sorted(generators, key=lambda h: order.key(max(h.terms, key=order.key))):
        r = _reduce(g, basis, order) if basis else g
        if r.is_zero():
            continue
        if add(r):
            return GroebnerBasis([MultiPoly.one(variables)], order, variables)

    processed = 0
    while pairs:
        (i, j) = min(pairs, key=lambda ij: (pairs[ij], ij))
        del pairs[(i, j)]
        processed += 1
        if processed > limits.max_pairs:
            raise ResourceLimit(f"more than max_pairs={limits.max_pairs} S-pairs")
        r = _reduce(_spoly(basis[i], basis[j]), basis, order)
        if r.is_zero():
            continue
        if add(r):
            return GroebnerBasis([MultiPoly.one(variables)], order, variables)
        if processed % 50 == 0:
            logger.debug("buchberger: %d pairs processed, basis size %d, %d pending",
                         processed, len(basis), len(pairs))

    # minimalize, then interreduce
    minimal: List[_Reducer] = []
    for g in sorted(basis, key=lambda r: order.key(r.lead)):
        if all(not _divides(m.lead, g.lead) for m in minimal):
            minimal.append(g)
    reduced = []
    for k, g in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        reduced.append(_monic(_reduce(g.poly, others, order), order))
    logger.debug("buchberger: reduced basis of %d elements after %d pairs", len(reduced), processed)
    return GroebnerBasis(reduced, order, variables)


class GroebnerBasis:
    """A reduced Groebner basis, sorted by increasing leading monomial."""

    def __init__(self, basis: Iterable[MultiPoly], order: MonomialOrder,
                 variables: Sequence[str]) -> None:
        self.variables = tuple(variables)
        self.order = order
        basis = [b.embed(self.variables) for b in basis]
        self.basis = sorted(basis, key=lambda b: order.key(max(b.terms, key=order.key)))
        self._reducers = [_Reducer(b, order) for b in self.basis]
        self._standard: Optional[List[Exponent]] = None

    @property
    def leading_monomials(self) -> List[Exponent]:
        return [r.lead for r in self._reducers]

    def is_unit(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].is_constant()

    def normal_form(self, f: MultiPoly) -> MultiPoly:
        """Remainder of f on division by the basis; zero iff f is in the ideal."""
        f = f.embed(self.variables)
        if not self._reducers:
            return f
        return _reduce(f, self._reducers, self.order)

    def contains(self, f: MultiPoly) -> bool:
        return self.normal_form(f).is_zero()

    # Zero-dimensional structure

    def standard_monomials(self) -> Optional[List[Exponent]]:
        """Monomials outside the leading ideal, or None when infinitely many."""
        if self._standard is not None:
            return self._standard
        nvars = len(self.variables)
        if self.is_unit():
            self._standard = []
            return self._standard
        leads = self.leading_monomials
        for k in range(nvars):
            if not any(lead[k] and not any(e for j, e in enumerate(lead) if j != k) for lead in leads):
                return None
        start = (0,) * nvars
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for mono in frontier:
                for k in range(nvars):
                    cand = mono[:k] + (mono[k] + 1,) + mono[k + 1:]
                    if cand in seen or any(_divides(lead, cand) for lead in leads):
                        continue
                    seen.add(cand)
                    nxt.append(cand)
            frontier = nxt
        self._standard = sorted(seen, key=self.order.key)
        return self._standard

    def quotient_dimension(self) -> Union[int, float]:
        """Dimension of the quotient ring as a vector space; INFINITE if unbounded."""
        standard = self.standard_monomials()
        return INFINITE if standard is None else len(standard)

    def variety_dimension(self) -> int:
        """Krull dimension from maximal independent variable sets.

        Raises:
            ImproperIdeal: If the basis is {1}
        """
        if self.is_unit():
            raise ImproperIdeal("the ideal is the whole ring")
        nvars = len(self.variables)
        supports = [frozenset(k for k, e in enumerate(lead) if e) for lead in self.leading_monomials]
        for size in range(nvars, -1, -1):
            for subset in combinations(range(nvars), size):
                chosen = set(subset)
                if all(not s <= chosen for s in supports):
                    return size
        return 0

    def _require_finite(self) -> List[Exponent]:
        standard = self.standard_monomials()
        if standard is None:
            raise NotZeroDimensional("ideal is not zero-dimensional")
        return standard

    def multiplication_matrix(self, f: MultiPoly) -> List[List[GaussianRational]]:
        """Matrix of multiplication by f on the standard-monomial basis.

        Column k holds the coordinates of normal_form(f * m_k).
        """
        standard = self._require_finite()
        index = {m: k for k, m in enumerate(standard)}
        size = len(standard)
        matrix = [[GaussianRational(0)] * size for _ in range(size)]
        f = f.embed(self.variables)
        for col, mono in enumerate(standard):
            image = self.normal_form(f.mul_monomial(mono))
            for exp, coeff in image.terms.items():
                matrix[index[exp]][col] = coeff
        return matrix

    def minimal_polynomial(self, f: MultiPoly, name: str = "z") -> MultiPoly:
        """Minimal polynomial of multiplication by f, in the variable ``name``.

        Raises:
            NotZeroDimensional: If the quotient is infinite-dimensional
        """
        self._require_finite()
        f = f.embed(self.variables)
        span = LinearSpan()
        power = self.normal_form(MultiPoly.one(self.variables))
        k = 0
        while True:
            relation = span.add(power.terms, k)
            if relation is not None:
                coeffs = [relation.get(j, GaussianRational(0)) for j in range(k + 1)]
                return MultiPoly.from_univariate(coeffs, name).normalized()
            power = self.normal_form(power * f)
            k += 1

    def univariate_eliminant(self, v: str) -> MultiPoly:
        """Generator of the ideal intersected with Q(i)[v]."""
        return self.minimal_polynomial(MultiPoly.variable(v, self.variables), v)

    def is_radical_zero_dim(self) -> bool:
        """Squarefree-eliminant test for radicality of a zero-dimensional ideal.

        Raises:
            NotZeroDimensional: If the quotient is infinite-dimensional
        """
        self._require_finite()
        for v in self.variables:
            eliminant = self.univariate_eliminant(v)
            if not poly_gcd(eliminant, eliminant.derivative(v)).is_constant():
                logger.debug("eliminant in %s is not squarefree", v)
                return False
        return True

    def elements_free_of(self, dropped: Iterable[str]) -> List[MultiPoly]:
        positions = [self.variables.index(v) for v in dropped]
        return [b for b in self.basis
                if all(not exp[k] for exp in b.terms for k in positions)]

    def __eq__(self, other) -> bool:
        return (isinstance(other, GroebnerBasis) and self.order == other.order
                and self.variables == other.variables and self.basis == other.basis)

    def __len__(self) -> int:
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def __repr__(self) -> str:
        return f"GroebnerBasis([{', '.join(str(b) for b in self.basis)}], {self.order})"

    def to_json(self) -> dict:
        return {"variables": list(self.variables), "order": self.order.kind,
                "basis": [b.to_json() for b in self.basis]}


class LinearSpan:
    """Incremental Gaussian elimination on sparse vectors over Q(i).

    Each added vector is tagged; a dependent vector yields the relation
    among tags that produces zero.
    """

    def __init__(self) -> None:
        self.rows: List[Tuple[object, Dict, Dict]] = []

    def _eliminate(self, vector: Dict, combo: Dict) -> Tuple[Dict, Dict]:
        vector, combo = dict(vector), dict(combo)
        for pivot, row, row_combo in self.rows:
            c = vector.get(pivot)
            if c is None:
                continue
            for key, value in row.items():
                updated = vector.get(key, GaussianRational(0)) - c * value
                if updated:
                    vector[key] = updated
                else:
                    vector.pop(key, None)
            for tag, value in row_combo.items():
                updated = combo.get(tag, GaussianRational(0)) - c * value
                if updated:
                    combo[tag] = updated
                else:
                    combo.pop(tag, None)
        return vector, combo

    def add(self, vector: Dict, tag) -> Optional[Dict]:
        """Add a vector; return the dependency relation if it is in the span."""
        vector, combo = self._eliminate(vector, {tag: ONE})
        if not vector:
            return combo
        pivot = next(iter(vector))
        scale = vector[pivot].inverse()
        self.rows.append((pivot, {k: v * scale for k, v in vector.items()},
                          {k: v * scale for k, v in combo.items()}))
        return None

    def express(self, vector: Dict) -> Optional[Dict]:
        """Coefficients writing ``vector`` in terms of the tagged vectors, if possible."""
        residual, combo = self._eliminate(vector, {})
        if residual:
            return None
        return {tag: -value for tag, value in combo.items()}

    def __len__(self) -> int:
        return len(self.rows)


def normal_form(f: MultiPoly, gb: GroebnerBasis) -> MultiPoly:
    return gb.normal_form(f)


def quotient_dimension(gb: GroebnerBasis) -> Union[int, float]:
    return gb.quotient_dimension()


def variety_dimension(gb: GroebnerBasis) -> int:
    return gb.variety_dimension()


def is_radical_zero_dim(gb: GroebnerBasis) -> bool:
    return gb.is_radical_zero_dim()


def eliminate(ideal: Ideal, drop: Iterable[str],
              limits: Optional[GroebnerLimits] = None) -> Ideal:
    """Elimination ideal in the variables not dropped.

    Uses a block order with the dropped variables in front.

    Raises:
        ResourceLimit: If the Groebner computation exceeds a cap
    """
    drop = [v for v in ideal.variables if v in set(drop)]
    kept = [v for v in ideal.variables if v not in drop]
    ordered = Ideal(ideal.generators, drop + kept)
    gb = buchberger(ordered, MonomialOrder.block(len(drop)), limits)
    survivors = [b.embed(kept) for b in gb.elements_free_of(drop)]
    logger.debug("eliminated %s: %d of %d basis elements survive", drop, len(survivors), len(gb))
    return Ideal(survivors, kept)
