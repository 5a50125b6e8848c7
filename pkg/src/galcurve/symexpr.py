"""Univariate expressions in ``x``: parsing, evaluation, symbolic derivatives.

Grammar (loosest to tightest)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' unary)?          # right associative
    atom   := NUMBER | 'x' | 'pi' | 'e' | FUNC '(' expr ')' | '(' expr ')'

so ``-x^2`` is ``-(x^2)`` and ``2^3^2`` is ``2^(3^2)``.

Evaluation accepts a float or a numpy array and is vectorised; any point
outside the mathematical domain of a sub-expression raises
:class:`ExprDomainError` naming that sub-expression.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Union

import numpy as np

FUNCTIONS = ("sin", "cos", "tan", "exp", "log", "sqrt", "abs")
NAMED_CONSTANTS = {"pi": math.pi, "e": math.e}


class ExprError(ValueError):
    pass


class ExprSyntaxError(ExprError):
    def __init__(self, message: str, pos: int, src: str = ""):
        self.pos = pos
        self.src = src
        super().__init__(f"{message} at position {pos}")


class UnknownIdentifierError(ExprSyntaxError):
    def __init__(self, name: str, pos: int, src: str = ""):
        self.name = name
        super().__init__(f"unknown identifier {name!r}", pos, src)


class ExprDomainError(ExprError):
    def __init__(self, message: str, subexpr: Expr):
        self.subexpr = subexpr
        super().__init__(f"{message} in {to_string(subexpr)}")


# --------------------------------------------------------------------------
# AST


@dataclass(frozen=True)
class Const:
    value: float
    name: str | None = None


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Neg:
    arg: Expr


@dataclass(frozen=True)
class BinOp:
    op: str
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Call:
    func: str
    arg: Expr


Expr = Union[Const, Var, Neg, BinOp, Call]
X = Var()


def is_constant(e: Expr) -> bool:
    """True when ``e`` does not depend on ``x``."""
    if isinstance(e, Const):
        return True
    if isinstance(e, Var):
        return False
    if isinstance(e, Neg):
        return is_constant(e.arg)
    if isinstance(e, BinOp):
        return is_constant(e.left) and is_constant(e.right)
    return is_constant(e.arg)


def _value(e: Expr) -> float | None:
    return e.value if isinstance(e, Const) else None


# Smart constructors doing the constant folding that diff relies on.

def const(v: float) -> Const:
    return Const(float(v))


def neg(a: Expr) -> Expr:
    if isinstance(a, Const):
        return const(-a.value)
    if isinstance(a, Neg):
        return a.arg
    return Neg(a)


def add(a: Expr, b: Expr) -> Expr:
    va, vb = _value(a), _value(b)
    if va is not None and vb is not None:
        return const(va + vb)
    if va == 0:
        return b
    if vb == 0:
        return a
    return BinOp("+", a, b)


def sub(a: Expr, b: Expr) -> Expr:
    va, vb = _value(a), _value(b)
    if va is not None and vb is not None:
        return const(va - vb)
    if vb == 0:
        return a
    if va == 0:
        return neg(b)
    return BinOp("-", a, b)


def mul(a: Expr, b: Expr) -> Expr:
    va, vb = _value(a), _value(b)
    if va is not None and vb is not None:
        return const(va * vb)
    if va == 0 or vb == 0:
        return const(0.0)
    if va == 1:
        return b
    if vb == 1:
        return a
    if va == -1:
        return neg(b)
    if vb == -1:
        return neg(a)
    return BinOp("*", a, b)


def div(a: Expr, b: Expr) -> Expr:
    va, vb = _value(a), _value(b)
    if va is not None and vb is not None and vb != 0:
        return const(va / vb)
    if vb == 1:
        return a
    if va == 0 and vb is None:
        return const(0.0)
    return BinOp("/", a, b)


def power(a: Expr, b: Expr) -> Expr:
    vb = _value(b)
    if vb == 1:
        return a
    if vb == 0:
        return const(1.0)
    return BinOp("^", a, b)


def call(func: str, a: Expr) -> Expr:
    return Call(func, a)


# --------------------------------------------------------------------------
# Parsing

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)"
    r"|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[-+*/^()]))"
)


def _tokenize(src: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        while pos < len(src) and src[pos].isspace():
            pos += 1
        if pos >= len(src):
            break
        m = _TOKEN_RE.match(src, pos)
        if m is None or m.end() == pos:
            raise ExprSyntaxError(f"unexpected character {src[pos]!r}", pos, src)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(src)))
    return tokens


_BINARY_POWER = {"+": 10, "-": 10, "*": 20, "/": 20, "^": 30}
_UNARY_MINUS_POWER = 25


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.tokens = _tokenize(src)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, text: str):
        kind, value, pos = self.advance()
        if value != text or kind == "end":
            found = "end of input" if kind == "end" else repr(value)
            raise ExprSyntaxError(f"expected {text!r}, found {found}", pos, self.src)

    def parse(self) -> Expr:
        e = self.expression(0)
        kind, value, pos = self.peek()
        if kind != "end":
            raise ExprSyntaxError(f"unexpected token {value!r}", pos, self.src)
        return e

    def expression(self, min_power: int) -> Expr:
        left = self.prefix()
        while True:
            kind, value, _ = self.peek()
            if kind != "op" or value not in _BINARY_POWER:
                return left
            bp = _BINARY_POWER[value]
            if bp < min_power:
                return left
            self.advance()
            if value == "^":
                # right associative; allows 2^-x
                right = self.expression(_UNARY_MINUS_POWER)
            else:
                right = self.expression(bp + 1)
            left = BinOp(value, left, right)

    def prefix(self) -> Expr:
        kind, value, pos = self.advance()
        if kind == "num":
            return Const(float(value))
        if kind == "op" and value == "-":
            return Neg(self.expression(_UNARY_MINUS_POWER))
        if kind == "op" and value == "(":
            e = self.expression(0)
            self.expect(")")
            return e
        if kind == "name":
            if value == "x":
                return X
            if value in NAMED_CONSTANTS:
                return Const(NAMED_CONSTANTS[value], value)
            if value in FUNCTIONS:
                self.expect("(")
                arg = self.expression(0)
                self.expect(")")
                return Call(value, arg)
            raise UnknownIdentifierError(value, pos, self.src)
        if kind == "end":
            raise ExprSyntaxError("unexpected end of input", pos, self.src)
        raise ExprSyntaxError(f"unexpected token {value!r}", pos, self.src)


def parse(src: str) -> Expr:
    """Parse an infix expression in the single variable ``x``."""
    return _Parser(src).parse()


def as_expr(e: Expr | str | float | int) -> Expr:
    if isinstance(e, str):
        return parse(e)
    if isinstance(e, (int, float)):
        return const(e)
    return e


# --------------------------------------------------------------------------
# Printing


def to_string(e: Expr) -> str:
    """Fully parenthesised form that parses back to an equivalent tree."""
    if isinstance(e, Const):
        if e.name is not None:
            return e.name
        text = repr(float(e.value))
        return f"({text})" if e.value < 0 or text.startswith("-") else text
    if isinstance(e, Var):
        return "x"
    if isinstance(e, Neg):
        return f"(-{to_string(e.arg)})"
    if isinstance(e, BinOp):
        return f"({to_string(e.left)}{e.op}{to_string(e.right)})"
    return f"{e.func}({to_string(e.arg)})"


# --------------------------------------------------------------------------
# Evaluation


def evaluate(e: Expr | str, x):
    """Evaluate at a float (returns float) or an array (returns array)."""
    e = as_expr(e)
    arr = np.asarray(x, dtype=float)
    with np.errstate(all="ignore"):
        out = _eval(e, arr)
    out = np.broadcast_to(out, arr.shape)
    if arr.ndim == 0:
        return float(out)
    return np.array(out, dtype=float)


def _check_finite(value: np.ndarray, e: Expr) -> np.ndarray:
    if not np.all(np.isfinite(value)):
        raise ExprDomainError("non-finite value", e)
    return value


def _is_integral(v: np.ndarray) -> bool:
    return bool(np.all(np.isfinite(v)) and np.all(v == np.round(v)))


def _eval(e: Expr, x: np.ndarray) -> np.ndarray:
    if isinstance(e, Const):
        return np.asarray(e.value)
    if isinstance(e, Var):
        return x
    if isinstance(e, Neg):
        return -_eval(e.arg, x)
    if isinstance(e, BinOp):
        a = _eval(e.left, x)
        b = _eval(e.right, x)
        if e.op == "+":
            return _check_finite(a + b, e)
        if e.op == "-":
            return _check_finite(a - b, e)
        if e.op == "*":
            return _check_finite(a * b, e)
        if e.op == "/":
            if np.any(b == 0):
                raise ExprDomainError("division by zero", e)
            return _check_finite(a / b, e)
        # '^'
        if _is_integral(b):
            if np.any((a == 0) & (b < 0)):
                raise ExprDomainError("zero raised to a negative power", e)
            return _check_finite(np.power(a, b), e)
        if np.any(a <= 0):
            raise ExprDomainError("non-integer power of a non-positive base", e)
        return _check_finite(np.power(a, b), e)
    a = _eval(e.arg, x)
    f = e.func
    if f == "log":
        if np.any(a <= 0):
            raise ExprDomainError("logarithm of a non-positive value", e)
        return np.log(a)
    if f == "sqrt":
        if np.any(a < 0):
            raise ExprDomainError("square root of a negative value", e)
        return np.sqrt(a)
    if f == "sin":
        return np.sin(a)
    if f == "cos":
        return np.cos(a)
    if f == "tan":
        return _check_finite(np.tan(a), e)
    if f == "exp":
        return _check_finite(np.exp(a), e)
    if f == "abs":
        return np.abs(a)
    raise ExprError(f"unsupported function {f!r}")


# --------------------------------------------------------------------------
# Differentiation


def diff(e: Expr | str) -> Expr:
    """Exact derivative with respect to ``x`` (constant folding only)."""
    e = as_expr(e)
    if isinstance(e, Const):
        return const(0.0)
    if isinstance(e, Var):
        return const(1.0)
    if isinstance(e, Neg):
        return neg(diff(e.arg))
    if isinstance(e, BinOp):
        u, v = e.left, e.right
        if e.op == "+":
            return add(diff(u), diff(v))
        if e.op == "-":
            return sub(diff(u), diff(v))
        if e.op == "*":
            return add(mul(diff(u), v), mul(u, diff(v)))
        if e.op == "/":
            if is_constant(v):
                return div(diff(u), v)
            return div(sub(mul(diff(u), v), mul(u, diff(v))), power(v, const(2)))
        if e.op == "^":
            if is_constant(v):
                vv = _value(v)
                lowered = const(vv - 1) if vv is not None else sub(v, const(1))
                return mul(mul(v, power(u, lowered)), diff(u))
            # u^v * (v' log u + v u'/u)
            return mul(e, add(mul(diff(v), call("log", u)), div(mul(v, diff(u)), u)))
        raise ExprError(f"no derivative rule for operator {e.op!r}")
    if isinstance(e, Call):
        u = e.arg
        du = diff(u)
        f = e.func
        if f == "sin":
            inner = call("cos", u)
        elif f == "cos":
            inner = neg(call("sin", u))
        elif f == "tan":
            inner = div(const(1), power(call("cos", u), const(2)))
        elif f == "exp":
            inner = e
        elif f == "log":
            return div(du, u)
        elif f == "sqrt":
            return div(du, mul(const(2), e))
        elif f == "abs":
            inner = div(u, e)
        else:
            raise ExprError(f"no derivative rule for function {f!r}")
        return mul(inner, du)
    raise ExprError(f"no derivative rule for node {e!r}")
