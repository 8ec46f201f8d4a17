"""Expression language for the calculator.

Grammar (whitespace is insignificant except inside literals)::

    expr     := term (("+" | "-") term)*
    term     := factor (("*" | "/") factor)*
    factor   := "-" factor | power
    power    := atom ("^" INT)?
    atom     := RATIONAL | DECIMAL | "e" | "liouville"
              | "sqrt" "(" expr ")" | "(" expr ")"

A rational literal is ``INT/INT`` written without spaces and with a nonzero
denominator, so ``1/3`` is one atom while ``1 / 3`` and ``1/0`` are
divisions.  Because the literal is an atom, ``6/2^2`` means ``(6/2)^2``.
Exponents are bare non-negative integers: ``2^-1`` is rejected.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .constructions import e_const, liouville, sqrt_pos
from .errors import ExactRealError, SignUnknown
from .interval import Interval, format_rational
from .real import Budget, Real, add, decimal_expansion, div, embed, mul, neg, power, recip, sub

MAX_EXPONENT = 2**31 - 1
CONSTANTS = ("e", "liouville")

Span = tuple[int, int]


@dataclass(frozen=True)
class RationalLit:
    value: Fraction
    span: Span = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Const:
    name: str
    span: Span = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Neg:
    operand: "Expr"
    span: Span = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Sqrt:
    operand: "Expr"
    span: Span = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int
    span: Span = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"
    span: Span = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Sub:
    left: "Expr"
    right: "Expr"
    span: Span = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"
    span: Span = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Div:
    left: "Expr"
    right: "Expr"
    span: Span = field(default=(0, 0), compare=False, repr=False)


Expr = Union[RationalLit, Const, Neg, Sqrt, Pow, Add, Sub, Mul, Div]
_BINARY = {"+": Add, "-": Sub, "*": Mul, "/": Div}
_SYMBOL = {Add: "+", Sub: "-", Mul: "*", Div: "/"}


class ParseError(ExactRealError, ValueError):
    """``position`` is a UTF-8 byte offset into the input; ``column`` the
    character offset, handy for drawing a caret."""

    def __init__(self, text: str, column: int, expected: str, found: str):
        self.text = text
        self.column = column
        self.position = len(text[:column].encode("utf-8"))
        self.expected = expected
        self.found = found
        super().__init__(f"expected {expected}, found {found} at offset {self.position}")

    def caret(self) -> str:
        line = self.text.replace("\n", " ")
        return f"{line}\n{' ' * self.column}^"


@dataclass(frozen=True)
class Token:
    kind: str  # INT DEC NAME OP EOF
    text: str
    start: int

    @property
    def end(self) -> int:
        return self.start + len(self.text)


_TOKEN_RE = re.compile(r"\s*(?:([0-9]+\.[0-9]+)|([0-9]+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while True:
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            break
        dec, integer, name, op = m.groups()
        start = m.start(m.lastindex)
        if dec is not None:
            tokens.append(Token("DEC", dec, start))
        elif integer is not None:
            tokens.append(Token("INT", integer, start))
        elif name is not None:
            tokens.append(Token("NAME", name, start))
        else:
            if op not in "+-*/^()":
                raise ParseError(text, start, "an expression", repr(op))
            tokens.append(Token("OP", op, start))
        pos = m.end()
    tokens.append(Token("EOF", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def peek(self, k: int = 1) -> Token:
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def fail(self, expected: str):
        t = self.tok
        found = "end of input" if t.kind == "EOF" else repr(t.text)
        raise ParseError(self.text, t.start, expected, found)

    def advance(self) -> Token:
        t = self.tok
        self.i += 1
        return t

    def at_op(self, *ops) -> bool:
        return self.tok.kind == "OP" and self.tok.text in ops

    def expect_op(self, op: str) -> Token:
        if not self.at_op(op):
            self.fail(repr(op))
        return self.advance()

    def parse(self) -> Expr:
        node = self.expr()
        if self.tok.kind != "EOF":
            self.fail("an operator or end of input")
        return node

    def expr(self) -> Expr:
        node = self.term()
        while self.at_op("+", "-"):
            cls = _BINARY[self.advance().text]
            right = self.term()
            node = cls(node, right, span=(node.span[0], right.span[1]))
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.at_op("*", "/"):
            cls = _BINARY[self.advance().text]
            right = self.factor()
            node = cls(node, right, span=(node.span[0], right.span[1]))
        return node

    def factor(self) -> Expr:
        if self.at_op("-"):
            start = self.advance().start
            operand = self.factor()
            return Neg(operand, span=(start, operand.span[1]))
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if not self.at_op("^"):
            return base
        self.advance()
        if self.tok.kind != "INT":
            self.fail("a non-negative integer exponent")
        t = self.advance()
        n = int(t.text)
        if n > MAX_EXPONENT:
            self.i -= 1
            self.fail(f"an exponent at most {MAX_EXPONENT}")
        return Pow(base, n, span=(base.span[0], t.end))

    def atom(self) -> Expr:
        t = self.tok
        if t.kind == "INT":
            self.advance()
            slash, den = self.tok, self.peek()
            if (slash.kind == "OP" and slash.text == "/" and slash.start == t.end
                    and den.kind == "INT" and den.start == slash.end and int(den.text) != 0):
                self.i += 2
                return RationalLit(Fraction(int(t.text), int(den.text)), span=(t.start, den.end))
            return RationalLit(Fraction(int(t.text)), span=(t.start, t.end))
        if t.kind == "DEC":
            self.advance()
            whole, frac = t.text.split(".")
            value = Fraction(int(whole + frac), 10 ** len(frac))
            return RationalLit(value, span=(t.start, t.end))
        if t.kind == "NAME":
            if t.text in CONSTANTS:
                self.advance()
                return Const(t.text, span=(t.start, t.end))
            if t.text == "sqrt":
                self.advance()
                self.expect_op("(")
                inner = self.expr()
                close = self.expect_op(")")
                return Sqrt(inner, span=(t.start, close.end))
            self.fail("a number, constant, 'sqrt' or '('")
        if self.at_op("("):
            self.advance()
            inner = self.expr()
            self.expect_op(")")
            return inner
        self.fail("a number, constant, 'sqrt' or '('")


def parse(text: str) -> Expr:
    return _Parser(text).parse()


def unparse(node: Expr) -> str:
    """Render ``node`` so that ``parse(unparse(node)) == node`` for any tree
    the parser can produce."""
    if isinstance(node, RationalLit):
        if node.value < 0:
            return f"(-{format_rational(-node.value)})"
        return format_rational(node.value)
    if isinstance(node, Const):
        return node.name
    if isinstance(node, Sqrt):
        return f"sqrt({unparse(node.operand)})"
    if isinstance(node, Neg):
        inner = unparse(node.operand)
        if isinstance(node.operand, (Add, Sub, Mul, Div)):
            inner = f"({inner})"
        return f"-{inner}"
    if isinstance(node, Pow):
        base = unparse(node.base)
        if not isinstance(node.base, (RationalLit, Const, Sqrt)) or base.startswith("("):
            base = f"({base})"
        return f"{base}^{node.exponent}"
    left, right = unparse(node.left), unparse(node.right)
    if isinstance(node.left, (Add, Sub, Mul, Div)):
        left = f"({left})"
    if isinstance(node.right, (Add, Sub, Mul, Div)):
        right = f"({right})"
    return f"{left} {_SYMBOL[type(node)]} {right}"


def _with_span(err: SignUnknown, span: Span) -> SignUnknown:
    if err.span is None:
        err.span = span
    return err


def to_real(node: Expr, budget: Optional[Budget] = None) -> Real:
    """Build the Real denoted by ``node``.

    Division, negative powers and square roots certify a sign here, so they
    may raise SignUnknown tagged with the offending subexpression's span.
    """
    if isinstance(node, RationalLit):
        return embed(node.value)
    if isinstance(node, Const):
        return e_const() if node.name == "e" else liouville()
    if isinstance(node, Neg):
        return neg(to_real(node.operand, budget))
    if isinstance(node, Sqrt):
        x = to_real(node.operand, budget)
        try:
            return sqrt_pos(x, budget)
        except SignUnknown as err:
            raise _with_span(err, node.operand.span)
    if isinstance(node, Pow):
        base = to_real(node.base, budget)
        if node.exponent >= 0:
            return power(base, node.exponent)
        try:
            return recip(power(base, -node.exponent), budget)
        except SignUnknown as err:
            raise _with_span(err, node.base.span)
    left, right = to_real(node.left, budget), to_real(node.right, budget)
    if isinstance(node, Add):
        return add(left, right)
    if isinstance(node, Sub):
        return sub(left, right)
    if isinstance(node, Mul):
        return mul(left, right)
    try:
        return div(left, right, budget)
    except SignUnknown as err:
        raise _with_span(err, node.right.span)


@dataclass(frozen=True)
class EvalResult:
    decimal: str
    interval: Interval
    error_bound: Fraction
    certain: bool

    def to_json(self) -> dict:
        return {
            "decimal": self.decimal,
            "center": format_rational(self.interval.center),
            "radius": format_rational(self.interval.radius),
        }


def default_eval_budget(digits: int) -> Budget:
    return Budget(min_epsilon=Fraction(1, 10 ** (digits + 10)))


def evaluate(expr: Union[str, Expr], digits: int, budget: Optional[Budget] = None) -> EvalResult:
    if digits < 0:
        raise ValueError("digits must be non-negative")
    node = parse(expr) if isinstance(expr, str) else expr
    if budget is None:
        budget = default_eval_budget(digits)
    real = to_real(node, budget)
    res = decimal_expansion(real, digits, budget)
    return EvalResult(res.text, res.interval, res.error_bound, res.certain)


def random_expression(rng: random.Random, depth: int = 3, *, allow_div: bool = True,
                      allow_consts: bool = True) -> str:
    """Random source text in the calculator language (used for round-trip
    tests and the ``diag`` command).  Only non-negative literal radicands and
    nonzero literal divisors are produced."""

    def literal():
        kind = rng.randrange(3)
        if kind == 0:
            return str(rng.randint(0, 99))
        if kind == 1:
            return f"{rng.randint(0, 99)}/{rng.randint(1, 60)}"
        return f"{rng.randint(0, 9)}.{rng.randint(0, 999):03d}"

    def positive_literal():
        return f"{rng.randint(1, 99)}/{rng.randint(1, 30)}"

    def gen(d):
        if d <= 0 or rng.random() < 0.25:
            if allow_consts and rng.random() < 0.15:
                return rng.choice(CONSTANTS)
            return literal()
        choice = rng.randrange(8 if allow_div else 7)
        if choice == 0:
            return f"-{gen(d - 1)}"
        if choice == 1:
            return f"sqrt({positive_literal()})"
        if choice == 2:
            return f"({gen(d - 1)})^{rng.randint(0, 3)}"
        if choice in (3, 4):
            return f"({gen(d - 1)} + {gen(d - 1)})"
        if choice == 5:
            return f"({gen(d - 1)} - {gen(d - 1)})"
        if choice == 6:
            return f"{gen(d - 1)} * {gen(d - 1)}"
        return f"{gen(d - 1)} / {positive_literal()}"

    return gen(depth)
