"""Germ definition files.

A file is a sequence of named sections::

    # the cusp differential d(x^3 - y^2)
    [cusp]
    P = 3*x^2
    Q = -2*y

    [cusp_curve]
    curve = y^2 - x^3

Polynomials use integers, fractions ``a/b``, the imaginary unit ``i``, the
variables ``x`` and ``y``, ``+ - * ^`` (``**`` is accepted for ``^``) and
parentheses. Juxtaposition multiplies (``2x^2y``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .algebra import BivariatePolynomial, GaussianRational
from .errors import EquisingError

_TOKEN = re.compile(r"\s*(?:(\d+)|(\*\*|[-+*/^()])|([xyi]))")


class GermParseError(EquisingError, ValueError):
    """Syntax error with a 1-based ``line`` and ``column``."""

    def __init__(self, message, line=None, column=None):
        loc = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(loc + message)
        self.line = line
        self.column = column


@dataclass(frozen=True)
class GermSpec:
    name: str
    kind: str  # "foliation" or "curve"
    P: BivariatePolynomial | None = None
    Q: BivariatePolynomial | None = None
    curve: BivariatePolynomial | None = None
    line: int = 0


class _Parser:
    def __init__(self, text: str, line: int = 1, col0: int = 1):
        self.text = text
        self.line = line
        self.col0 = col0
        self.tokens = []
        pos = 0
        n = len(text.rstrip())
        while pos < n:
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                col = pos + len(text[pos:]) - len(text[pos:].lstrip())
                self.fail(f"unexpected character {text[col]!r}", col)
            num, op, var = m.groups()
            start = m.start(m.lastindex)
            self.tokens.append((num or op or var, start, "num" if num else "op" if op else "var"))
            pos = m.end()
        self.k = 0

    def fail(self, message, pos=None):
        if pos is None:
            pos = self.tokens[self.k][1] if self.k < len(self.tokens) else len(self.text.rstrip())
        raise GermParseError(message, self.line, self.col0 + pos)

    def peek(self):
        return self.tokens[self.k] if self.k < len(self.tokens) else (None, None, None)

    def take(self):
        tok = self.peek()
        self.k += 1
        return tok

    def parse(self) -> BivariatePolynomial:
        if not self.tokens:
            self.fail("empty expression")
        p = self.expr()
        if self.k != len(self.tokens):
            self.fail(f"unexpected {self.peek()[0]!r}")
        return p

    def expr(self):
        acc = self.term()
        while self.peek()[0] in ("+", "-"):
            sign = self.take()[0]
            t = self.term()
            acc = acc + t if sign == "+" else acc - t
        return acc

    def term(self):
        acc = self.unary()
        while True:
            tok, pos, kind = self.peek()
            if tok == "*":
                self.take()
                acc = acc * self.unary()
            elif tok == "/":
                self.take()
                d = self.unary()
                if d.degree() != 0:
                    self.fail("division only by nonzero constants", pos)
                acc = acc.scale(d.constant_term().inverse())
            elif kind in ("num", "var") or tok == "(":
                acc = acc * self.power()
            else:
                return acc

    def unary(self):
        tok = self.peek()[0]
        if tok == "-":
            self.take()
            return -self.unary()
        if tok == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] in ("^", "**"):
            self.take()
            tok, pos, kind = self.take()
            if kind != "num":
                self.fail("exponent must be a nonnegative integer", pos)
            base = base ** int(tok)
        return base

    def atom(self):
        tok, pos, kind = self.take()
        if tok is None:
            self.fail("unexpected end of expression")
        if kind == "num":
            return BivariatePolynomial.const(int(tok))
        if tok == "x":
            return BivariatePolynomial.x()
        if tok == "y":
            return BivariatePolynomial.y()
        if tok == "i":
            return BivariatePolynomial.const(GaussianRational(0, 1))
        if tok == "(":
            inner = self.expr()
            if self.take()[0] != ")":
                self.fail("missing ')'", pos)
            return inner
        self.k -= 1
        self.fail(f"unexpected {tok!r}")


def parse_polynomial(text: str, line: int = 1, column: int = 1) -> BivariatePolynomial:
    """Parse a polynomial expression; errors report positions relative to ``line``/``column``."""
    return _Parser(text, line, column).parse()


_SECTION = re.compile(r"^\[\s*([A-Za-z0-9_.\-]+)\s*\]$")
_ASSIGN = re.compile(r"^(P|Q|curve)\s*=\s*")


def parse_germ_file(text: str) -> dict[str, GermSpec]:
    """Parse the text of a germ file into named germ specifications."""
    sections: dict[str, dict] = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        stripped = body.strip()
        if not stripped:
            continue
        indent = len(body) - len(body.lstrip())
        m = _SECTION.match(stripped)
        if m:
            name = m.group(1)
            if name in sections:
                raise GermParseError(f"duplicate germ name {name!r}", lineno, indent + 1)
            current = sections[name] = {"_line": lineno}
            continue
        m = _ASSIGN.match(stripped)
        if not m:
            raise GermParseError("expected '[name]' or 'P =', 'Q =', 'curve ='", lineno, indent + 1)
        if current is None:
            raise GermParseError("assignment outside a [name] section", lineno, indent + 1)
        key = m.group(1)
        if key in current:
            raise GermParseError(f"duplicate key {key!r}", lineno, indent + 1)
        col = indent + m.end() + 1
        current[key] = parse_polynomial(stripped[m.end():], lineno, col)
    out = {}
    for name, d in sections.items():
        line = d["_line"]
        if "curve" in d:
            if "P" in d or "Q" in d:
                raise GermParseError(f"germ {name!r} mixes 'curve' with 'P'/'Q'", line, 1)
            out[name] = GermSpec(name, "curve", curve=d["curve"], line=line)
        elif "P" in d and "Q" in d:
            out[name] = GermSpec(name, "foliation", P=d["P"], Q=d["Q"], line=line)
        else:
            raise GermParseError(f"germ {name!r} needs both 'P' and 'Q' or a 'curve'", line, 1)
    return out


def load_germ_file(path) -> dict[str, GermSpec]:
    with open(path, encoding="utf-8") as fh:
        return parse_germ_file(fh.read())
