"""Expression trees and the parser for parametrisation components.

Grammar (rational literals are single tokens, so 3/4 is a number, not a
division):

    tuple    := "(" expr ("," expr)* ")"
    expr     := term (("+" | "-") term)*
    term     := unary ("*" unary)*
    unary    := "-" unary | power
    power    := atom ("^" INT)?
    atom     := NUMBER | "i" | NAME | NAME "(" expr ")" | "(" expr ")"
    NUMBER   := INT ("/" INT)?

Built-in series are normalized to vanish at 0 (exp1m = exp(u)-1, log1p,
sinS = sin, cosM1 = cos-1) so their Taylor coefficients stay Gaussian
rational; applying one to a subtree with a nonzero value at the base point
raises NonRationalExpansion.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import NonRationalExpansion, ParseError
from .jets import Jet
from .scalar import Scalar


class Builtin:
    def __init__(self, name, coefficient, hint=4):
        self.name = name
        self.coefficient = coefficient  # k >= 1 -> Scalar coeff of u^k
        self.expansion_order_hint = hint


def _exp1m_coeff(k):
    from math import factorial
    return Scalar(Fraction(1, factorial(k)))


def _log1p_coeff(k):
    return Scalar(Fraction(1 if k % 2 == 1 else -1, k))


def _sin_coeff(k):
    from math import factorial
    if k % 2 == 0:
        return Scalar(0)
    return Scalar(Fraction((-1) ** ((k - 1) // 2), factorial(k)))


def _cosm1_coeff(k):
    from math import factorial
    if k % 2 == 1:
        return Scalar(0)
    return Scalar(Fraction((-1) ** (k // 2), factorial(k)))


BUILTINS = {
    "exp1m": Builtin("exp1m", _exp1m_coeff),
    "log1p": Builtin("log1p", _log1p_coeff),
    "sinS": Builtin("sinS", _sin_coeff),
    "cosM1": Builtin("cosM1", _cosm1_coeff),
}


# -- tree nodes -----------------------------------------------------------

class Node:
    def is_polynomial(self):
        raise NotImplementedError

    def evaluate(self, var_jets, order):
        raise NotImplementedError

    def to_text(self):
        raise NotImplementedError

    def __eq__(self, other):
        return (type(self) is type(other)
                and self._key() == other._key())

    def __hash__(self):
        return hash((type(self).__name__, self._key()))

    def __repr__(self):
        return self.to_text()


class Literal(Node):
    def __init__(self, value):
        self.value = value

    def _key(self):
        return self.value

    def is_polynomial(self):
        return True

    def evaluate(self, var_jets, order):
        first = var_jets[0]
        return Jet.constant(first.variables, first.base, self.value)

    def to_text(self):
        s = str(self.value)
        return f"({s})" if ("+" in s[1:] or "-" in s[1:]) else s


class Var(Node):
    def __init__(self, name, index):
        self.name = name
        self.index = index

    def _key(self):
        return (self.name, self.index)

    def is_polynomial(self):
        return True

    def evaluate(self, var_jets, order):
        return var_jets[self.index]

    def to_text(self):
        return self.name


class Add(Node):
    def __init__(self, children, signs):
        self.children = tuple(children)
        self.signs = tuple(signs)  # +1 / -1 per child

    def _key(self):
        return (self.children, self.signs)

    def is_polynomial(self):
        return all(c.is_polynomial() for c in self.children)

    def evaluate(self, var_jets, order):
        out = None
        for sign, child in zip(self.signs, self.children):
            v = child.evaluate(var_jets, order)
            if sign < 0:
                v = -v
            out = v if out is None else out + v
        return out.truncate(order)

    def to_text(self):
        parts = []
        for k, (sign, child) in enumerate(zip(self.signs, self.children)):
            text = child.to_text()
            if k == 0:
                parts.append(text if sign > 0 else f"-{text}")
            else:
                parts.append(("+ " if sign > 0 else "- ") + text)
        return " ".join(parts)


class Mul(Node):
    def __init__(self, children):
        self.children = tuple(children)

    def _key(self):
        return self.children

    def is_polynomial(self):
        return all(c.is_polynomial() for c in self.children)

    def evaluate(self, var_jets, order):
        out = None
        for child in self.children:
            v = child.evaluate(var_jets, order)
            out = v if out is None else (out * v).truncate(order)
        return out

    def to_text(self):
        return "*".join(
            f"({c.to_text()})" if isinstance(c, Add) else c.to_text()
            for c in self.children)


class Pow(Node):
    def __init__(self, base, exponent):
        self.base = base
        self.exponent = exponent

    def _key(self):
        return (self.base, self.exponent)

    def is_polynomial(self):
        return self.base.is_polynomial()

    def evaluate(self, var_jets, order):
        return (self.base.evaluate(var_jets, order) ** self.exponent
                ).truncate(order)

    def to_text(self):
        inner = self.base.to_text()
        if isinstance(self.base, (Add, Mul, Neg)):
            inner = f"({inner})"
        return f"{inner}^{self.exponent}"


class Neg(Node):
    def __init__(self, child):
        self.child = child

    def _key(self):
        return (self.child,)

    def is_polynomial(self):
        return self.child.is_polynomial()

    def evaluate(self, var_jets, order):
        return -self.child.evaluate(var_jets, order)

    def to_text(self):
        inner = self.child.to_text()
        if isinstance(self.child, Add):
            inner = f"({inner})"
        return f"-{inner}"


class Call(Node):
    def __init__(self, builtin, argument):
        self.builtin = builtin
        self.argument = argument

    def _key(self):
        return (self.builtin.name, self.argument)

    def is_polynomial(self):
        return False

    def evaluate(self, var_jets, order):
        u = self.argument.evaluate(var_jets, order)
        if not u.value().is_zero():
            raise NonRationalExpansion(
                f"{self.builtin.name} applied to a subtree with value "
                f"{u.value()} at the base point")
        if u.is_zero_through_truncation() and u.exact:
            return Jet.zero(u.variables, u.base)
        if order == float("inf"):
            raise NonRationalExpansion(
                "series built-ins need a finite truncation order")
        acc = Jet.constant(u.variables, u.base,
                           self.builtin.coefficient(order))
        for k in range(order - 1, 0, -1):
            acc = (acc * u).truncate(order) + self.builtin.coefficient(k)
        out = (acc * u).truncate(order)
        # the summation was cut at `order`: inexact no matter what
        valid = min(order, u.effective_order())
        return Jet(out.variables, out.base, valid,
                   {nu: c for nu, c in out.terms.items()
                    if sum(nu) <= valid}, exact=False)

    def to_text(self):
        return f"{self.builtin.name}({self.argument.to_text()})"


def to_poly(node, variables):
    """Evaluate a polynomial tree into a Poly (no built-ins allowed)."""
    from .poly import Poly
    if isinstance(node, Literal):
        return Poly.constant(variables, node.value)
    if isinstance(node, Var):
        return Poly.variable(variables, node.index)
    if isinstance(node, Add):
        out = Poly.zero(variables)
        for sign, child in zip(node.signs, node.children):
            p = to_poly(child, variables)
            out = out + (p if sign > 0 else -p)
        return out
    if isinstance(node, Mul):
        out = Poly.constant(variables, 1)
        for child in node.children:
            out = out * to_poly(child, variables)
        return out
    if isinstance(node, Pow):
        return to_poly(node.base, variables) ** node.exponent
    if isinstance(node, Neg):
        return -to_poly(node.child, variables)
    raise ValueError(f"not a polynomial tree: {node.to_text()}")


def max_builtin_hint(node):
    if isinstance(node, Call):
        return max(node.builtin.expansion_order_hint,
                   max_builtin_hint(node.argument))
    if isinstance(node, (Literal, Var)):
        return 0
    if isinstance(node, Add):
        return max(max_builtin_hint(c) for c in node.children)
    if isinstance(node, Mul):
        return max(max_builtin_hint(c) for c in node.children)
    if isinstance(node, Pow):
        return max_builtin_hint(node.base)
    if isinstance(node, Neg):
        return max_builtin_hint(node.child)
    raise TypeError(node)


# -- tokenizer / parser ----------------------------------------------------

_TOKEN_RE = re.compile(r"""
      (?P<number>\d+(?:/\d+)?)
    | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
    | (?P<op>[-+*^(),])
    | (?P<ws>\s+)
    | (?P<bad>.)
""", re.VERBOSE)


class _Token:
    __slots__ = ("kind", "text", "line", "column")

    def __init__(self, kind, text, line, column):
        self.kind = kind
        self.text = text
        self.line = line
        self.column = column


def tokenize(text):
    tokens = []
    line, col = 1, 1
    for m in _TOKEN_RE.finditer(text):
        kind = m.lastgroup
        chunk = m.group()
        if kind == "bad":
            raise ParseError(f"unexpected character {chunk!r}", line, col)
        if kind != "ws":
            tokens.append(_Token(kind, chunk, line, col))
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            col = len(chunk) - chunk.rfind("\n")
        else:
            col += len(chunk)
    tokens.append(_Token("end", "", line, col))
    return tokens


class Parser:
    def __init__(self, text, variables):
        self.tokens = tokenize(text)
        self.pos = 0
        self.variables = list(variables)

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind=None, text=None):
        tok = self.tokens[self.pos]
        if kind and tok.kind != kind:
            raise ParseError(f"expected {text or kind}, got {tok.text!r}",
                             tok.line, tok.column)
        if text and tok.text != text:
            raise ParseError(f"expected {text!r}, got {tok.text!r}",
                             tok.line, tok.column)
        self.pos += 1
        return tok

    def parse_tuple(self):
        self.take("op", "(")
        exprs = [self.parse_expr()]
        while self.peek().text == ",":
            self.take("op", ",")
            exprs.append(self.parse_expr())
        self.take("op", ")")
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"trailing input {tok.text!r}",
                             tok.line, tok.column)
        return exprs

    def parse_expr(self):
        children = [self.parse_term()]
        signs = [1]
        while self.peek().text in ("+", "-"):
            op = self.take("op")
            signs.append(1 if op.text == "+" else -1)
            children.append(self.parse_term())
        if len(children) == 1 and signs[0] == 1:
            return children[0]
        return Add(children, signs)

    def parse_term(self):
        children = [self.parse_unary()]
        while self.peek().text == "*":
            self.take("op", "*")
            children.append(self.parse_unary())
        if len(children) == 1:
            return children[0]
        return Mul(children)

    def parse_unary(self):
        if self.peek().text == "-":
            self.take("op", "-")
            return Neg(self.parse_unary())
        return self.parse_power()

    def parse_power(self):
        base = self.parse_atom()
        if self.peek().text == "^":
            self.take("op", "^")
            tok = self.take("number")
            if "/" in tok.text:
                raise ParseError("exponents must be non-negative integers",
                                 tok.line, tok.column)
            return Pow(base, int(tok.text))
        return base

    def parse_atom(self):
        tok = self.peek()
        if tok.kind == "number":
            self.take()
            return Literal(Scalar(Fraction(tok.text)))
        if tok.kind == "name":
            self.take()
            if tok.text == "i":
                return Literal(Scalar(0, 1))
            if tok.text in BUILTINS:
                self.take("op", "(")
                arg = self.parse_expr()
                self.take("op", ")")
                return Call(BUILTINS[tok.text], arg)
            if tok.text in self.variables:
                return Var(tok.text, self.variables.index(tok.text))
            raise ParseError(f"unknown name {tok.text!r}",
                             tok.line, tok.column)
        if tok.text == "(":
            self.take("op", "(")
            inner = self.parse_expr()
            self.take("op", ")")
            return inner
        raise ParseError(f"unexpected token {tok.text!r}",
                         tok.line, tok.column)


def parse_expression(text, variables):
    parser = Parser(text, variables)
    expr = parser.parse_expr()
    tok = parser.peek()
    if tok.kind != "end":
        raise ParseError(f"trailing input {tok.text!r}", tok.line, tok.column)
    return expr


def parse_component_tuple(text, variables):
    return Parser(text, variables).parse_tuple()
