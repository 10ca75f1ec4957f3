"""Recursive-descent parser for polynomial expressions.

Grammar::

    expr   := ["+"|"-"] term (("+"|"-") term)*
    term   := factor ("*" factor)*
    factor := atom ("^" INT)?
    atom   := NUMBER ["/" NUMBER] | IDENT | "(" expr ")"
"""

from __future__ import annotations

import re
from fractions import Fraction

from .algebra import PolyRing, Polynomial
from .errors import InputError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


class ParseError(InputError):
    """Syntax error; ``line`` and ``column`` are 1-based."""

    def __init__(self, message, line=1, column=1, source=None):
        where = f"{source}: " if source else ""
        super().__init__(f"{where}line {line}, column {column}: {message}")
        self.source = source
        self.line = line
        self.column = column
        self.reason = message


def tokenize(text: str, line: int = 1, col0: int = 1):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(("num", m.group(1), col0 + start))
        elif m.group(2):
            out.append(("id", m.group(2), col0 + start))
        else:
            out.append(("op", m.group(3), col0 + start))
        pos = m.end()
    out.append(("end", "", col0 + len(text.rstrip())))
    return out


class _Parser:
    def __init__(self, ring: PolyRing, text: str, line: int, col0: int):
        self.ring = ring
        self.toks = tokenize(text, line, col0)
        self.i = 0
        self.line = line

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.line, tok[2])

    def expect(self, kind, value=None):
        t = self.peek()
        if t[0] != kind or (value is not None and t[1] != value):
            want = value or kind
            got = t[1] or "end of input"
            self.fail(f"expected {want!r}, found {got!r}")
        return self.take()

    def expr(self):
        sign = 1
        t = self.peek()
        if t[0] == "op" and t[1] in "+-":
            self.take()
            sign = -1 if t[1] == "-" else 1
        acc = -self.term() if sign == -1 else self.term()
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] in "+-":
                self.take()
                rhs = self.term()
                acc = acc + rhs if t[1] == "+" else acc - rhs
            else:
                return acc

    def term(self):
        acc = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self):
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            t = self.expect("num")
            return base ** int(t[1])
        return base

    def atom(self):
        t = self.peek()
        ring = self.ring
        if t[0] == "num":
            self.take()
            val = Fraction(int(t[1]))
            if self.peek()[0] == "op" and self.peek()[1] == "/":
                self.take()
                d = self.expect("num")
                if int(d[1]) == 0:
                    self.fail("division by zero", d)
                val = val / int(d[1])
            try:
                return ring.const(val)
            except ZeroDivisionError as e:
                self.fail(str(e), t)
        if t[0] == "id":
            self.take()
            if t[1] not in ring.variables:
                self.fail(f"undeclared variable {t[1]!r}", t)
            return ring.var(t[1])
        if t[0] == "op" and t[1] == "(":
            self.take()
            v = self.expr()
            self.expect("op", ")")
            return v
        self.fail(f"unexpected {t[1] or 'end of input'!r}")


def parse_polynomial(ring: PolyRing, text: str, *, line: int = 1, column: int = 1) -> Polynomial:
    p = _Parser(ring, text, line, column)
    if p.peek()[0] == "end":
        p.fail("empty polynomial")
    v = p.expr()
    if p.peek()[0] != "end":
        p.fail(f"unexpected {p.peek()[1]!r}")
    return v


def split_top_level(text: str, sep: str):
    """Split on ``sep`` outside parentheses; yields ``(piece, offset)``."""
    depth = 0
    start = 0
    out = []
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == sep and depth == 0:
            out.append((text[start:i], start))
            start = i + 1
    out.append((text[start:], start))
    return out
