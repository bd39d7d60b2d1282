"""
Parser for the polynomial text grammar.

    expr    := term (("+" | "-") term)*
    term    := unary (("*" | "/") unary)*
    unary   := ("+" | "-") unary | power
    power   := atom ("^" INTEGER)?
    atom    := INTEGER | NAME | "(" expr ")"

Division is only allowed by a nonzero constant, so "3/2*x^2*z" and "x/4"
parse while "1/x" is rejected. Names must be coordinates of the chart.
"""

from typing import List, NamedTuple, Optional
import logging
import re

from sympy.polys.rings import PolyElement

from ..core.exceptions import ParseError
from .chart import Chart

logger = logging.getLogger(__name__)

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))")


class _Token(NamedTuple):
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> List[_Token]:
    tokens: List[_Token] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if not match or match.end() == pos:
            offset = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"Unexpected character '{text[offset]}'", position=offset)
        kind = match.lastgroup or "op"
        tokens.append(_Token(kind, match.group(kind), match.start(kind)))
        pos = match.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, chart: Chart) -> None:
        self.chart = chart
        self.ring = chart.ring
        self.tokens = _tokenize(text)
        self.index = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.index]

    def _take(self, text: Optional[str] = None) -> _Token:
        token = self.current
        if text is not None and token.text != text:
            expected = f"'{text}'"
            found = f"'{token.text}'" if token.text else "end of input"
            raise ParseError(f"Expected {expected}, found {found}", position=token.pos)
        self.index += 1
        return token

    def parse(self) -> PolyElement:
        if self.current.kind == "end":
            raise ParseError("Empty polynomial", position=0)
        value = self._expr()
        if self.current.kind != "end":
            raise ParseError(f"Unexpected token '{self.current.text}'", position=self.current.pos)
        return value

    def _expr(self) -> PolyElement:
        value = self._term()
        while self.current.text in ("+", "-"):
            op = self._take().text
            rhs = self._term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def _term(self) -> PolyElement:
        value = self._unary()
        while self.current.text in ("*", "/"):
            op_token = self._take()
            rhs = self._unary()
            if op_token.text == "*":
                value = value * rhs
                continue
            if not rhs.is_ground or not rhs:
                raise ParseError(
                    "Division is only allowed by a nonzero constant", position=op_token.pos
                )
            value = value.quo_ground(rhs.LC)
        return value

    def _unary(self) -> PolyElement:
        if self.current.text in ("+", "-"):
            op = self._take().text
            operand = self._unary()
            return operand if op == "+" else -operand
        return self._power()

    def _power(self) -> PolyElement:
        base = self._atom()
        if self.current.text == "^":
            self._take()
            token = self.current
            if token.kind != "int":
                raise ParseError("Exponent must be a non-negative integer", position=token.pos)
            self._take()
            return base ** int(token.text)
        return base

    def _atom(self) -> PolyElement:
        token = self.current
        if token.kind == "int":
            self._take()
            return self.ring.ground_new(int(token.text))
        if token.kind == "name":
            self._take()
            if token.text not in self.chart.coords:
                raise ParseError(
                    f"Unknown coordinate '{token.text}' (chart is {self.chart})", position=token.pos
                )
            return self.chart.gen(token.text)
        if token.text == "(":
            self._take()
            value = self._expr()
            self._take(")")
            return value
        found = f"'{token.text}'" if token.text else "end of input"
        raise ParseError(f"Unexpected {found}", position=token.pos)


def parse_polynomial(text: str, chart: Chart, field: Optional[str] = None) -> PolyElement:
    """
    Parse a polynomial string on a chart.

    Args:
        text: The polynomial text, e.g. "3/2*x^2*z".
        chart: Chart whose coordinates may appear.
        field: Document field path, attached to errors.

    Returns:
        The polynomial.

    Raises:
        ParseError: With the offending position and field.

    Example:
        >>> chart = Chart(("x", "y", "z"))
        >>> p = parse_polynomial("3/2*x^2*z - y", chart)
    """
    if not isinstance(text, str):
        if isinstance(text, int) and not isinstance(text, bool):
            return chart.ring.ground_new(text)
        err = ParseError(f"Expected a polynomial string, got {type(text).__name__}")
        raise err.at_field(field) if field else err
    try:
        return _Parser(text, chart).parse()
    except ParseError as e:
        if field:
            raise e.at_field(field)
        raise
