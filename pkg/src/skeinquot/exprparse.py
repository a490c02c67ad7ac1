"""Expression language over q, x1, x2, y and the generator families.

Grammar (precedence ^ > unary minus > * > binary +/-)::

    expr     := term (('+' | '-') term)*
    term     := unary ('*' unary)*
    unary    := ('-' | '+') unary | power
    power    := atom ('^' exponent)?
    exponent := ['-'] INT | '(' ['-'] INT ')'
    atom     := INT | SYMBOL | NAME '(' expr (',' expr)* ')' | '(' expr ')'

Builtins: G(n) J(n) Q(n) U(n) F(n) sigma(n) W(n), S(n, e), T(n, e),
bk(n) = {n}, qi(n) = [n].  Text produced by ``str(SkeinPoly)`` parses back
to the same polynomial.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, Tuple, Union

from .chebyshev import cheb_S, cheb_T
from .generators import FAMILIES
from .qlaurent import Q, bracket, qint
from .ringcore import X1, X2, Y, SkeinPoly

__all__ = ["ExprError", "ExprSyntaxError", "parse", "evaluate", "parse_poly"]

SYMBOLS = {"q": SkeinPoly.lift(Q), "x1": X1, "x2": X2, "y": Y}
FAMILY_CALLS = {"G", "J", "Q", "U", "F", "sigma", "W"}
CHEB_CALLS = {"S": cheb_S, "T": cheb_T}
SCALAR_CALLS = {"bk": bracket, "qi": qint}


class ExprError(ValueError):
    """Semantic error in an expression (bad exponent, bad builtin argument...)."""

    def __init__(self, msg: str, line: int = 0, col: int = 0):
        where = f"line {line}, column {col}: " if line else ""
        super().__init__(where + msg)
        self.line, self.col = line, col


class ExprSyntaxError(ExprError):
    def __init__(self, msg: str, line: int, col: int, expected=()):
        if expected:
            msg += "; expected one of: " + ", ".join(sorted(expected))
        super().__init__(msg, line, col)
        self.expected = frozenset(expected)


# -- AST -------------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: int
    pos: Tuple[int, int]


@dataclass(frozen=True)
class Sym:
    name: str
    pos: Tuple[int, int]


@dataclass(frozen=True)
class Neg:
    operand: "Expr"
    pos: Tuple[int, int]


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"
    pos: Tuple[int, int]


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int
    pos: Tuple[int, int]


@dataclass(frozen=True)
class Call:
    name: str
    args: Tuple["Expr", ...]
    pos: Tuple[int, int]


Expr = Union[Num, Sym, Neg, BinOp, Pow, Call]


# -- lexer -------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^(),]))")


@dataclass(frozen=True)
class Token:
    kind: str  # 'int', 'name', 'op', 'eof'
    text: str
    line: int
    col: int


def _tokenize(text: str) -> List[Token]:
    toks = []
    i, line, line_start = 0, 1, 0
    n = len(text)
    while True:
        # advance over whitespace, tracking newlines
        while i < n and text[i].isspace():
            if text[i] == "\n":
                line += 1
                line_start = i + 1
            i += 1
        if i >= n:
            toks.append(Token("eof", "", line, i - line_start + 1))
            return toks
        m = _TOKEN.match(text, i)
        col = i - line_start + 1
        if not m:
            raise ExprSyntaxError(f"unexpected character {text[i]!r}", line, col)
        kind = m.lastgroup
        toks.append(Token(kind, m.group(kind), line, col))
        i = m.end()


# -- parser ------------------------------------------------------------------------

_ATOM_START = ("integer", "name", "'('", "'-'", "'+'")


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def _fail(self, expected):
        t = self.tok
        found = "end of input" if t.kind == "eof" else repr(t.text)
        raise ExprSyntaxError(f"unexpected {found}", t.line, t.col, expected)

    def _is(self, text):
        return self.tok.kind == "op" and self.tok.text == text

    def _expect(self, text):
        if not self._is(text):
            self._fail([f"'{text}'"])
        self.i += 1

    def parse(self) -> Expr:
        e = self.expr()
        if self.tok.kind != "eof":
            self._fail(["'+'", "'-'", "'*'", "'^'", "end of input"])
        return e

    def expr(self):
        left = self.term()
        while self._is("+") or self._is("-"):
            t = self.tok
            self.i += 1
            left = BinOp(t.text, left, self.term(), (t.line, t.col))
        return left

    def term(self):
        left = self.unary()
        while self._is("*"):
            t = self.tok
            self.i += 1
            left = BinOp("*", left, self.unary(), (t.line, t.col))
        return left

    def unary(self):
        if self._is("-"):
            t = self.tok
            self.i += 1
            return Neg(self.unary(), (t.line, t.col))
        if self._is("+"):
            self.i += 1
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self._is("^"):
            t = self.tok
            self.i += 1
            return Pow(base, self.exponent(), (t.line, t.col))
        return base

    def exponent(self) -> int:
        paren = self._is("(")
        if paren:
            self.i += 1
        sign = 1
        if self._is("-"):
            sign = -1
            self.i += 1
        if self.tok.kind != "int":
            expected = ["integer"]
            if sign > 0:
                expected.append("'-'")
                if not paren:
                    expected.append("'('")
            self._fail(expected)
        k = sign * int(self.tok.text)
        self.i += 1
        if paren:
            self._expect(")")
        return k

    def atom(self):
        t = self.tok
        pos = (t.line, t.col)
        if t.kind == "int":
            self.i += 1
            return Num(int(t.text), pos)
        if t.kind == "name":
            self.i += 1
            if self._is("("):
                self.i += 1
                args = [self.expr()]
                while self._is(","):
                    self.i += 1
                    args.append(self.expr())
                if not self._is(")"):
                    self._fail(["','", "')'"])
                self.i += 1
                return Call(t.text, tuple(args), pos)
            return Sym(t.text, pos)
        if self._is("("):
            self.i += 1
            e = self.expr()
            self._expect(")")
            return e
        self._fail(_ATOM_START)


def parse(text: str) -> Expr:
    return _Parser(text).parse()


# -- evaluation ----------------------------------------------------------------------

def _int_arg(node: Expr) -> int:
    v = evaluate(node)
    if not v:
        return 0
    if v.deg_y() == 0 and len(v.coeff_y(0)) == 1:
        c = v.coeff_y(0).get((0, 0))
        if c.is_constant():
            return c.coeff(0)
    raise ExprError("builtin index must be an integer", *node.pos)


def evaluate(node: Expr) -> SkeinPoly:
    if isinstance(node, Num):
        return SkeinPoly.lift(node.value)
    if isinstance(node, Sym):
        try:
            return SYMBOLS[node.name]
        except KeyError:
            raise ExprError(f"unknown symbol {node.name!r} (expected q, x1, x2 or y)", *node.pos) from None
    if isinstance(node, Neg):
        return -evaluate(node.operand)
    if isinstance(node, BinOp):
        a, b = evaluate(node.left), evaluate(node.right)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        return a * b
    if isinstance(node, Pow):
        base = evaluate(node.base)
        k = node.exponent
        if k >= 0:
            return base ** k
        c = base.coeff_y(0).get((0, 0)) if base.deg_y() == 0 and len(base.coeff_y(0)) == 1 else None
        if c is None or not c.is_unit():
            raise ExprError("negative exponents are allowed only on powers of q", *node.pos)
        return SkeinPoly.lift(c ** k)
    if isinstance(node, Call):
        return _call(node)
    raise TypeError(f"not an expression node: {node!r}")


def _call(node: Call) -> SkeinPoly:
    name, args = node.name, node.args
    if name in FAMILY_CALLS or name in SCALAR_CALLS:
        if len(args) != 1:
            raise ExprError(f"{name}() takes exactly one argument", *node.pos)
        n = _int_arg(args[0])
        if name in SCALAR_CALLS:
            return SkeinPoly.lift(SCALAR_CALLS[name](n))
        try:
            return FAMILIES[name](n)
        except ValueError as exc:
            raise ExprError(str(exc), *node.pos) from None
    if name in CHEB_CALLS:
        if len(args) != 2:
            raise ExprError(f"{name}(n, e) takes exactly two arguments", *node.pos)
        n = _int_arg(args[0])
        return CHEB_CALLS[name](n)(evaluate(args[1]), SkeinPoly.lift(1))
    raise ExprError(
        f"unknown function {name!r}; builtins are G J Q U F sigma W S T bk qi", *node.pos
    )


def parse_poly(text: str) -> SkeinPoly:
    return evaluate(parse(text))
