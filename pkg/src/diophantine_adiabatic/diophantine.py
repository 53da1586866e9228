"""Parsing, printing, exact evaluation and exhaustive search of Diophantine equations.

Equations are read with the grammar::

    equation := expr "=" expr ;
    expr     := term (("+"|"-") term)* ;
    term     := factor ("*" factor)* ;
    factor   := ("-")? power ;
    power    := atom ("^" factor)? ;
    atom     := integer | identifier | "(" expr ")" ;

and normalized to ``d = lhs - rhs`` so that ``d = 0`` is the equation to solve
over the non-negative integers. Exponentials such as ``(a+3)^(b+2)`` are
allowed; exponents are checked for sign when evaluated.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from .errors import DiophantineSyntaxError, NegativeExponent

__all__ = [
    "IntConst", "Var", "Add", "Sub", "Mul", "Neg", "Pow", "Expr",
    "DiophantineEquation", "parse", "parse_expr", "to_source",
    "evaluate", "evaluate_expr", "brute_force_search",
]


@dataclass(frozen=True)
class IntConst:
    value: int


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Sub:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: "Expr"


Expr = Union[IntConst, Var, Add, Sub, Mul, Neg, Pow]


@dataclass(frozen=True)
class DiophantineEquation:
    """``d = 0`` over the unknowns in ``variables`` (first-appearance order)."""

    d: Expr
    variables: tuple[str, ...]
    source: str = ""

    @property
    def k(self) -> int:
        return len(self.variables)

    def __str__(self) -> str:
        return f"{to_source(self.d)} = 0"


# -- lexer -------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^()=]))")


@dataclass(frozen=True)
class _Token:
    kind: str  # "int", "ident", "op" or "end"
    text: str
    pos: int


def _tokenize(source: str) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(source):
        if source[pos:].strip() == "":
            break
        match = _TOKEN_RE.match(source, pos)
        if match is None:
            bad = pos + len(source[pos:]) - len(source[pos:].lstrip())
            raise DiophantineSyntaxError(f"unexpected character {source[bad]!r}", bad)
        kind = match.lastgroup
        tokens.append(_Token(kind, match.group(kind), match.start(kind)))
        pos = match.end()
    tokens.append(_Token("end", "", len(source)))
    return tokens


# -- recursive-descent parser -------------------------------------------------

class _Parser:
    def __init__(self, source: str):
        self.tokens = _tokenize(source)
        self.i = 0

    @property
    def tok(self) -> _Token:
        return self.tokens[self.i]

    def _is_op(self, text: str) -> bool:
        return self.tok.kind == "op" and self.tok.text == text

    def _expect(self, text: str) -> None:
        if not self._is_op(text):
            self._fail(f"expected {text!r}")
        self.i += 1

    def _fail(self, message: str):
        found = "end of input" if self.tok.kind == "end" else repr(self.tok.text)
        raise DiophantineSyntaxError(f"{message}, found {found}", self.tok.pos)

    def equation(self) -> tuple[Expr, Expr]:
        lhs = self.expr()
        self._expect("=")
        rhs = self.expr()
        if self.tok.kind != "end":
            self._fail("expected end of input")
        return lhs, rhs

    def expr(self) -> Expr:
        node = self.term()
        while self._is_op("+") or self._is_op("-"):
            op = self.tok.text
            self.i += 1
            right = self.term()
            node = Add(node, right) if op == "+" else Sub(node, right)
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self._is_op("*"):
            self.i += 1
            node = Mul(node, self.factor())
        return node

    def factor(self) -> Expr:
        if self._is_op("-"):
            self.i += 1
            return Neg(self.power())
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self._is_op("^"):
            self.i += 1
            return Pow(base, self.factor())
        return base

    def atom(self) -> Expr:
        tok = self.tok
        if tok.kind == "int":
            self.i += 1
            return IntConst(int(tok.text))
        if tok.kind == "ident":
            self.i += 1
            return Var(tok.text)
        if self._is_op("("):
            self.i += 1
            node = self.expr()
            self._expect(")")
            return node
        self._fail("expected integer, identifier or '('")


def parse(source: str) -> DiophantineEquation:
    """Parse ``"<expr> = <expr>"`` into a normalized equation.

    The left-hand side is kept as is when the right-hand side is the literal
    ``0``; otherwise ``d = Sub(lhs, rhs)``.

    Raises
    ------
    DiophantineSyntaxError
        With the offset of the offending token.
    """
    parser = _Parser(source)
    lhs, rhs = parser.equation()
    d = lhs if rhs == IntConst(0) else Sub(lhs, rhs)
    names = dict.fromkeys(t.text for t in parser.tokens if t.kind == "ident")
    return DiophantineEquation(d, tuple(names), source)


def parse_expr(source: str) -> Expr:
    """Parse a bare expression (no ``=``)."""
    parser = _Parser(source)
    node = parser.expr()
    if parser.tok.kind != "end":
        parser._fail("expected end of input")
    return node


# -- printer -----------------------------------------------------------------

# Binding levels: sum < product < unary minus < power < atom.
_SUM, _PRODUCT, _FACTOR, _POWER, _ATOM = 1, 2, 3, 4, 5


def _level(e: Expr) -> int:
    if isinstance(e, (Add, Sub)):
        return _SUM
    if isinstance(e, Mul):
        return _PRODUCT
    if isinstance(e, Neg):
        return _FACTOR
    if isinstance(e, Pow):
        return _POWER
    if isinstance(e, IntConst) and e.value < 0:
        return _FACTOR
    return _ATOM


def _wrap(e: Expr, needed: int) -> str:
    text = to_source(e)
    return text if _level(e) >= needed else f"({text})"


def to_source(e: Expr) -> str:
    """Render an expression with the minimum parentheses needed to re-parse it identically."""
    match e:
        case IntConst(value):
            return str(value)
        case Var(name):
            return name
        case Add(left, right):
            return f"{_wrap(left, _SUM)} + {_wrap(right, _PRODUCT)}"
        case Sub(left, right):
            return f"{_wrap(left, _SUM)} - {_wrap(right, _PRODUCT)}"
        case Mul(left, right):
            return f"{_wrap(left, _PRODUCT)}*{_wrap(right, _FACTOR)}"
        case Neg(operand):
            return f"-{_wrap(operand, _POWER)}"
        case Pow(base, exponent):
            return f"{_wrap(base, _ATOM)}^{_wrap(exponent, _FACTOR)}"
    raise TypeError(f"not an expression node: {e!r}")


# -- evaluation --------------------------------------------------------------

def evaluate_expr(e: Expr, env: dict[str, int]) -> int:
    match e:
        case IntConst(value):
            return value
        case Var(name):
            return env[name]
        case Add(left, right):
            return evaluate_expr(left, env) + evaluate_expr(right, env)
        case Sub(left, right):
            return evaluate_expr(left, env) - evaluate_expr(right, env)
        case Mul(left, right):
            return evaluate_expr(left, env) * evaluate_expr(right, env)
        case Neg(operand):
            return -evaluate_expr(operand, env)
        case Pow(base, exponent):
            power = evaluate_expr(exponent, env)
            if power < 0:
                raise NegativeExponent(f"exponent {to_source(exponent)} evaluates to {power}")
            return evaluate_expr(base, env) ** power
    raise TypeError(f"not an expression node: {e!r}")


def evaluate(eq: DiophantineEquation, assignment: Sequence[int]) -> int:
    """Exact integer value of ``eq.d`` with ``variables[i] = assignment[i]``."""
    if len(assignment) != len(eq.variables):
        raise ValueError(
            f"expected {len(eq.variables)} values for {eq.variables}, got {len(assignment)}")
    if any(int(a) < 0 for a in assignment):
        raise ValueError(f"assignment must be non-negative, got {tuple(assignment)}")
    return evaluate_expr(eq.d, {name: int(a) for name, a in zip(eq.variables, assignment)})


def _grid(k: int, bound: int) -> Iterator[tuple[int, ...]]:
    return itertools.product(range(bound + 1), repeat=k)


def brute_force_search(eq: DiophantineEquation, bound: int) -> list[tuple[int, ...]]:
    """All solutions in ``{0..bound}^k``, in lexicographic order."""
    if bound < 0:
        raise ValueError("bound must be non-negative")
    return [t for t in _grid(eq.k, bound) if evaluate(eq, t) == 0]
