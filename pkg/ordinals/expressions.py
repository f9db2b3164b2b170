"""
Ordinal expressions: ``w^w + w*2 + 3``, ``w^(w+1)``, ``2^w``.

Grammar (Pratt parser): ``^`` binds tighter than ``*`` (or ``·``), which binds
tighter than ``+``; ``^`` is right-associative, the others left-associative.
``w`` and ``ω`` both denote omega. Whitespace is ignored.
"""
import logging
import re
from dataclasses import dataclass
from typing import List, Optional, Union

from ordinal_lab.conf import bound

from .cnf import OMEGA, Ordinal, add, mul, omega_pow, power, two_pow
from .exceptions import ExpressionSyntaxError, OrdinalError

logger = logging.getLogger('ordinals')


@dataclass(frozen=True)
class Literal:
    value: int
    position: int


@dataclass(frozen=True)
class Omega:
    position: int


@dataclass(frozen=True)
class BinOp:
    op: str
    left: 'OrdinalExpr'
    right: 'OrdinalExpr'
    position: int


OrdinalExpr = Union[Literal, Omega, BinOp]


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


TOKEN_PATTERN = re.compile(r'\s*(?:(\d+)|([wω])|([+*·^()])|(\S))')

BINDING_POWER = {'+': 10, '*': 20, '^': 30}


def tokenize(text: str) -> List[Token]:
    tokens = []
    for match in TOKEN_PATTERN.finditer(text):
        number, omega, operator, junk = match.groups()
        if number:
            tokens.append(Token('number', number, match.start(1)))
        elif omega:
            tokens.append(Token('omega', omega, match.start(2)))
        elif operator:
            tokens.append(Token('op', '*' if operator == '·' else operator, match.start(3)))
        elif junk:
            raise ExpressionSyntaxError(f'unexpected character {junk!r}', match.start(4), text)
    tokens.append(Token('end', '', len(text)))
    return tokens


class ExprParser:
    def __init__(self, text: str, max_literal: Optional[int] = None):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0
        self.max_literal = max_literal if max_literal is not None else bound('MAX_LITERAL')

    @property
    def token(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def error(self, message, token=None):
        token = token or self.token
        return ExpressionSyntaxError(message, token.position, self.text)

    def parse(self) -> OrdinalExpr:
        if self.token.kind == 'end':
            raise self.error('empty expression')
        expr = self.expression(0)
        if self.token.kind != 'end':
            raise self.error(f'unexpected {self.token.text!r}')
        return expr

    def expression(self, rbp: int) -> OrdinalExpr:
        left = self.nud(self.advance())
        while self.token.kind == 'op' and self.token.text in BINDING_POWER and rbp < BINDING_POWER[self.token.text]:
            operator = self.advance()
            left = self.led(operator, left)
        return left

    def nud(self, token: Token) -> OrdinalExpr:
        if token.kind == 'number':
            value = int(token.text)
            if value > self.max_literal:
                raise self.error(f'literal {token.text} exceeds the maximum {self.max_literal}', token)
            return Literal(value, token.position)
        if token.kind == 'omega':
            return Omega(token.position)
        if token.kind == 'op' and token.text == '(':
            inner = self.expression(0)
            if not (self.token.kind == 'op' and self.token.text == ')'):
                raise self.error("expected ')'")
            self.advance()
            return inner
        if token.kind == 'end':
            raise self.error('unexpected end of expression', token)
        raise self.error(f'unexpected {token.text!r}', token)

    def led(self, operator: Token, left: OrdinalExpr) -> OrdinalExpr:
        lbp = BINDING_POWER[operator.text]
        # ^ is right-associative: parse the right side one notch looser
        rbp = lbp - 1 if operator.text == '^' else lbp
        right = self.expression(rbp)
        return BinOp(operator.text, left, right, operator.position)


def parse_expr(text: str) -> OrdinalExpr:
    return ExprParser(text).parse()


def evaluate(expr: OrdinalExpr, text: str = '') -> Ordinal:
    if isinstance(expr, Literal):
        return Ordinal.finite(expr.value)
    if isinstance(expr, Omega):
        return OMEGA
    left_expr, right_expr = expr.left, expr.right
    if expr.op == '^':
        exponent = evaluate(right_expr, text)
        if isinstance(left_expr, Omega):
            return omega_pow(exponent)
        if isinstance(left_expr, Literal):
            if left_expr.value == 2:
                try:
                    return two_pow(exponent)
                except OrdinalError as exc:
                    raise ExpressionSyntaxError(str(exc), expr.position, text) from exc
            raise ExpressionSyntaxError(
                f'finite base {left_expr.value} is not supported; use 2 or w', left_expr.position, text
            )
        base = evaluate(left_expr, text)
        if base.is_finite:
            raise ExpressionSyntaxError(
                f'finite base {base} is not supported; use 2 or w', expr.position, text
            )
        try:
            return power(base, exponent)
        except OrdinalError as exc:
            raise ExpressionSyntaxError(str(exc), expr.position, text) from exc
    left, right = evaluate(left_expr, text), evaluate(right_expr, text)
    if expr.op == '+':
        return add(left, right)
    return mul(left, right)


def parse_ordinal(text: str) -> Ordinal:
    """Parse and evaluate ``text`` to its canonical ordinal."""
    value = evaluate(parse_expr(text), text)
    logger.debug(f'parsed {text!r} as {value}')
    return value


def parse_sequence(text: str) -> List[Ordinal]:
    """Comma-separated ordinal expressions, in the order given."""
    if not text.strip():
        return []
    values = []
    offset = 0
    for chunk in text.split(','):
        try:
            values.append(parse_ordinal(chunk))
        except ExpressionSyntaxError as exc:
            raise ExpressionSyntaxError(
                str(exc).rsplit(' at position', 1)[0], offset + exc.position, text
            ) from exc
        offset += len(chunk) + 1
    return values
