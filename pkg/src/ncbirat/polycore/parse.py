"""Tokenizer and recursive-descent parser for ASCII polynomial expressions.

The grammar is shared by every textual format in the package::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ['^' INT]
    atom   := INT ['/' INT] | NAME | '(' expr ')'

``NAME`` is an identifier optionally followed by ``.INT`` (``e.3``).  What a
name means is decided by the caller through a :class:`RingBuilder`.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

from .domains import QQ, Domain
from .poly import GREVLEX, MonomialOrder, Poly

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*(?:\.\d+)?)|(?P<op>[-+*/^()]))")


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} at line {line}, column {col}")
        self.line = line
        self.column = col


def tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos:].lstrip()[:1]!r}", text,
                             pos + len(text[pos:]) - len(text[pos:].lstrip()))
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return tokens


class RingBuilder:
    """Callbacks that give meaning to parsed syntax.  Default ops use Python operators."""

    def const(self, value: Fraction):
        raise NotImplementedError

    def var(self, name: str):
        raise NotImplementedError

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def pow(self, a, k: int):
        result = self.const(Fraction(1))
        for _ in range(k):
            result = self.mul(result, a)
        return result


class _Parser:
    def __init__(self, text: str, ring: RingBuilder):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0
        self.ring = ring

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, value):
        kind, val, pos = self.take()
        if val != value:
            raise ParseError(f"expected {value!r}, found {val!r}", self.text, pos)

    def parse(self):
        if not self.tokens:
            raise ParseError("empty expression", self.text, 0)
        value = self.expr()
        kind, val, pos = self.peek()
        if kind is not None:
            raise ParseError(f"unexpected token {val!r}", self.text, pos)
        return value

    def expr(self):
        kind, val, pos = self.peek()
        negate = False
        if val in ("+", "-"):
            self.take()
            negate = val == "-"
        acc = self.term()
        if negate:
            acc = self.ring.neg(acc)
        while True:
            kind, val, pos = self.peek()
            if val == "+":
                self.take()
                acc = self.ring.add(acc, self.term())
            elif val == "-":
                self.take()
                acc = self.ring.sub(acc, self.term())
            else:
                return acc

    def term(self):
        acc = self.factor()
        while self.peek()[1] == "*":
            self.take()
            acc = self.ring.mul(acc, self.factor())
        return acc

    def factor(self):
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            kind, val, pos = self.take()
            if kind != "num":
                raise ParseError("exponent must be a nonnegative integer", self.text, pos)
            return self.ring.pow(base, int(val))
        return base

    def atom(self):
        kind, val, pos = self.take()
        if kind == "num":
            num = int(val)
            if self.peek()[1] == "/":
                self.take()
                k2, v2, p2 = self.take()
                if k2 != "num":
                    raise ParseError("denominator must be an integer", self.text, p2)
                if int(v2) == 0:
                    raise ParseError("zero denominator", self.text, p2)
                return self.ring.const(Fraction(num, int(v2)))
            return self.ring.const(Fraction(num))
        if kind == "name":
            try:
                return self.ring.var(val)
            except KeyError:
                raise ParseError(f"unknown symbol {val!r}", self.text, pos) from None
        if val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if kind is None:
            raise ParseError("unexpected end of input", self.text, pos)
        raise ParseError(f"unexpected token {val!r}", self.text, pos)


def parse_with(text: str, ring: RingBuilder):
    return _Parser(text, ring).parse()


class _PolyRing(RingBuilder):
    def __init__(self, nvars: int, domain: Domain, names: Optional[Sequence[str]]):
        self.nvars = nvars
        self.domain = domain
        self.index = {n: i for i, n in enumerate(names)} if names else None

    def const(self, value):
        return Poly.constant(value, self.nvars, self.domain)

    def var(self, name):
        if self.index is not None:
            i = self.index[name]
        else:
            if not re.fullmatch(r"v\d+", name):
                raise KeyError(name)
            i = int(name[1:])
            if i >= self.nvars:
                raise KeyError(name)
        return Poly.var(i, self.nvars, self.domain)

    def pow(self, a, k):
        return a ** k


def parse_poly(text: str, nvars: int, domain: Domain = QQ,
               names: Optional[Sequence[str]] = None) -> Poly:
    """Parse ``text`` in variables ``v0..v{nvars-1}`` (or the given ``names``)."""
    return parse_with(text, _PolyRing(nvars, domain, names))


def format_coefficient(c) -> str:
    f = Fraction(int(c)) if not isinstance(c, (int, Fraction)) else Fraction(c)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def format_terms(items, monomial_str: Callable[[tuple], str]) -> str:
    """Join (exps, coeff) pairs already in output order."""
    parts = []
    for e, c in items:
        mono = monomial_str(e)
        f = Fraction(int(c)) if not isinstance(c, (int, Fraction)) else Fraction(c)
        sign = "-" if f < 0 else "+"
        mag = abs(f)
        if mono and mag == 1:
            body = mono
        else:
            coef = format_coefficient(mag)
            body = f"{coef}*{mono}" if mono else coef
        parts.append((sign, body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def format_poly(p: Poly, order: MonomialOrder = GREVLEX,
                names: Optional[Sequence[str]] = None) -> str:
    names = names or [f"v{i}" for i in range(p.nvars)]

    def mono(e):
        bits = []
        for n, k in zip(names, e):
            if k == 1:
                bits.append(n)
            elif k > 1:
                bits.append(f"{n}^{k}")
        return "*".join(bits)

    return format_terms(p.sorted_terms(order), mono)
