"""Expression syntax.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := '-' unary | power
    power  := atom ('^' INT)*
    atom   := scalar | generator | '(' expr ')'
    scalar := INT ('/' INT)?

Generators: ``e[u,v]`` (matrix unit), ``d[u,v]`` (deep generator), ``x0``,
``y1`` or ``x[u]``, ``y[v]`` (Leavitt words), ``f[i,j]`` (finite matrix unit)
and ``w[u]`` (basis vector).  Words are ``1.0.2`` (most significant digit
first) or ``_`` for the empty word.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from ..chain import AdicWord, format_word
from ..errors import ParseError


@dataclass(frozen=True)
class Num:
    num: int
    den: int = 1


@dataclass(frozen=True)
class Gen:
    kind: str  # one of e, d, x, y, f, w
    args: tuple


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str  # '+', '-', '*'
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int


Node = Union[Num, Gen, Neg, BinOp, Pow]

_PAIR_GENS = ("e", "d")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message, pos=None):
        raise ParseError(message, (self.pos if pos is None else pos) + 1)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            found = repr(self.text[self.pos]) if self.pos < len(self.text) else "end of input"
            self.error(f"expected {ch!r}, found {found}")
        self.pos += 1

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an integer")
        return int(self.text[start : self.pos])

    def word(self) -> AdicWord:
        if self.peek() == "_":
            self.pos += 1
            return AdicWord(())
        digits = [self.integer()]
        while self.pos < len(self.text) and self.text[self.pos] == ".":
            self.pos += 1
            digits.append(self.integer())
        return AdicWord(tuple(reversed(digits)))

    def parse(self) -> Node:
        node = self.expr()
        if self.peek():
            self.error(f"unexpected {self.text[self.pos]!r}")
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.peek() in ("+", "-"):
            op = self.text[self.pos]
            self.pos += 1
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.peek() == "*":
            self.pos += 1
            node = BinOp("*", node, self.unary())
        return node

    def unary(self) -> Node:
        if self.peek() == "-":
            self.pos += 1
            return Neg(self.unary())
        return self.power()

    def power(self) -> Node:
        node = self.atom()
        while self.peek() == "^":
            self.pos += 1
            node = Pow(node, self.integer())
        return node

    def atom(self) -> Node:
        c = self.peek()
        if not c:
            self.error("unexpected end of input")
        if c == "(":
            self.pos += 1
            node = self.expr()
            self.expect(")")
            return node
        if c.isdigit():
            num = self.integer()
            if self.peek() == "/":
                self.pos += 1
                den = self.integer()
                if den == 0:
                    self.error("zero denominator")
                return Num(num, den)
            return Num(num)
        if c in "edfw":
            self.pos += 1
            return self.bracketed(c)
        if c in "xy":
            self.pos += 1
            if self.peek() == "[":
                self.pos += 1
                w = self.word()
                self.expect("]")
                return Gen(c, (w,))
            if self.pos < len(self.text) and self.text[self.pos].isdigit():
                return Gen(c, (AdicWord((self.integer(),)),))
            self.error(f"expected a letter index after {c!r}")
        self.error(f"unexpected {c!r}")

    def bracketed(self, kind: str) -> Gen:
        self.expect("[")
        if kind == "f":
            i = self.integer()
            self.expect(",")
            j = self.integer()
            self.expect("]")
            return Gen("f", (i, j))
        if kind == "w":
            w = self.word()
            self.expect("]")
            return Gen("w", (w,))
        u = self.word()
        self.expect(",")
        v = self.word()
        self.expect("]")
        return Gen(kind, (u, v))


def parse(text: str) -> Node:
    return _Parser(text).parse()


_PREC = {"+": 1, "-": 1, "*": 2}


def _prec(node) -> int:
    if isinstance(node, BinOp):
        return _PREC[node.op]
    if isinstance(node, Neg):
        return 3
    if isinstance(node, Pow):
        return 4
    return 5


def _gen_text(g: Gen) -> str:
    if g.kind in _PAIR_GENS:
        return f"{g.kind}[{format_word(g.args[0])},{format_word(g.args[1])}]"
    if g.kind == "f":
        return f"f[{g.args[0]},{g.args[1]}]"
    w = g.args[0]
    if g.kind in "xy" and len(w) == 1:
        return f"{g.kind}{w.digits[0]}"
    return f"{g.kind}[{format_word(w)}]"


def to_text(node: Node, min_prec: int = 0) -> str:
    if isinstance(node, Num):
        s = str(node.num) if node.den == 1 else f"{node.num}/{node.den}"
    elif isinstance(node, Gen):
        s = _gen_text(node)
    elif isinstance(node, Neg):
        s = "-" + to_text(node.operand, 3)
    elif isinstance(node, Pow):
        s = f"{to_text(node.base, 4)}^{node.exponent}"
    else:
        p = _PREC[node.op]
        sep = "*" if node.op == "*" else f" {node.op} "
        s = to_text(node.left, p) + sep + to_text(node.right, p + 1)
    return f"({s})" if _prec(node) < min_prec else s
