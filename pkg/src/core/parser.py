"""
Text front end: polynomial and rational-function expressions.
"""

from logging import getLogger
from typing import Sequence, Union

import pyparsing as pp

from src.core.errors import PolynomialSyntaxError, UnknownVariable
from src.core.gaussian import I
from src.core.polynomial import MultiPoly
from src.core.rational_function import RationalFunction
from src.utils.constants import LOGGER_NAME

pp.ParserElement.enable_packrat()

logger = getLogger(LOGGER_NAME + ".parser")

Value = Union[MultiPoly, RationalFunction]

IMAGINARY_UNIT = "i"


class ExpressionParser:
    """Parses +, -, *, /, ^ expressions over a declared variable list.

    Args:
        variables: Declared variable names, in ring order
        allow_division: Whether division by a nonconstant is accepted
    """

    def __init__(self, variables: Sequence[str], allow_division: bool = False) -> None:
        self.variables = tuple(variables)
        self.allow_division = allow_division

        integer = pp.Regex(r"[0-9]+").set_parse_action(self._make_integer)
        identifier = pp.Regex(r"[A-Za-z_][A-Za-z0-9_]*").set_parse_action(self._make_name)
        lparen = pp.Literal("(").suppress()
        rparen = pp.Literal(")").suppress()

        expr = pp.Forward()
        atom = integer | identifier | (lparen + expr + rparen)
        arith_expr = pp.infix_notation(atom, [
            (pp.one_of("^ **"), 2, pp.OpAssoc.RIGHT, self._power),
            (pp.one_of("+ -"), 1, pp.OpAssoc.RIGHT, self._sign),
            (pp.one_of("* /"), 2, pp.OpAssoc.LEFT, self._product),
            (pp.one_of("+ -"), 2, pp.OpAssoc.LEFT, self._sum),
        ])
        expr <<= arith_expr
        self.expr = expr

    # Parse actions

    def _make_integer(self, toks):
        return MultiPoly.constant(int(toks[0]), self.variables)

    def _make_name(self, toks):
        name = toks[0]
        if name in self.variables:
            return MultiPoly.variable(name, self.variables)
        if name == IMAGINARY_UNIT:
            return MultiPoly.constant(I, self.variables)
        raise UnknownVariable(name)

    def _power(self, toks):
        items = list(toks[0])
        result = items[-1]
        for base in reversed(items[:-2:2]):
            result = self._raise(base, result)
        return result

    def _raise(self, base: Value, exponent: Value) -> Value:
        value = _constant_of(exponent)
        if value is None or not value.is_real() or value.re.denominator != 1:
            raise PolynomialSyntaxError("exponent must be an integer constant")
        power = int(value.re)
        if power < 0:
            if not self.allow_division:
                raise PolynomialSyntaxError("negative exponent in a polynomial")
            return RationalFunction._lift(base) ** power
        return base ** power

    @staticmethod
    def _sign(toks):
        items = list(toks[0])
        value = items[-1]
        for op in items[:-1]:
            if op == "-":
                value = -value
        return value

    def _product(self, toks):
        items = list(toks[0])
        result = items[0]
        for op, operand in zip(items[1::2], items[2::2]):
            if op == "*":
                result = result * operand
            else:
                result = self._divide(result, operand)
        return result

    def _divide(self, left: Value, right: Value) -> Value:
        value = _constant_of(right)
        if value is not None:
            if not value:
                raise PolynomialSyntaxError("division by zero")
            if isinstance(left, MultiPoly):
                return left / value
            return left / RationalFunction.constant(value, self.variables)
        if not self.allow_division:
            raise PolynomialSyntaxError("division by a nonconstant polynomial")
        return RationalFunction._lift(left) / right

    @staticmethod
    def _sum(toks):
        items = list(toks[0])
        result = items[0]
        for op, operand in zip(items[1::2], items[2::2]):
            result = result + operand if op == "+" else result - operand
        return result

    def parse(self, text: str) -> Value:
        """Parse text into an expanded polynomial or reduced fraction.

        Raises:
            PolynomialSyntaxError: On malformed text
            UnknownVariable: On undeclared names
        """
        try:
            parsed = self.expr.parse_string(text, parse_all=True)
        except pp.ParseBaseException as exc:
            raise PolynomialSyntaxError(f"cannot parse {text!r}: {exc}") from None
        result = parsed[0]
        logger.debug("parsed %r", text)
        return result


def _constant_of(value: Value):
    if isinstance(value, MultiPoly):
        return value.constant_value() if value.is_constant() else None
    if value.is_constant():
        return value.constant_value()
    return None


def parse_polynomial(text: str, variables: Sequence[str]) -> MultiPoly:
    """Parse a polynomial such as ``"p^2*(p+1)-q^2"``.

    Division is accepted only by nonzero constants, so ``"p/2"`` is valid.
    """
    result = ExpressionParser(variables).parse(text)
    if isinstance(result, RationalFunction):
        return result.num / result.den.constant_value()
    return result


def parse_rational_function(text: str, variables: Sequence[str]) -> RationalFunction:
    """Parse a rational expression such as ``"i*(p+1)/(p-1)"`` and reduce it."""
    result = ExpressionParser(variables, allow_division=True).parse(text)
    if isinstance(result, MultiPoly):
        return RationalFunction(result, reduced=True)
    return result


def parse_number(text: str):
    """Parse a Gaussian-rational constant such as ``"5/2"`` or ``"1-2*i"``."""
    return parse_polynomial(text, ()).constant_value()

