"""Sparse bivariate polynomials over Q(i)."""

from __future__ import annotations

from typing import Mapping

import sympy

from ..errors import ZeroPolynomial
from .gaussian import GaussianRational, ONE, ZERO
from .series import TruncatedSeries, series_mul
from .univariate import _X, _Y, from_domain, to_sympy

Exponent = tuple[int, int]


def _gr(c) -> GaussianRational:
    return GaussianRational.coerce(c)


class BivariatePolynomial:
    """``sum c_ij x**i y**j`` with no stored zero coefficient.

    Instances are immutable; all arithmetic returns new polynomials.
    """

    def __init__(self, terms: Mapping[Exponent, object] | None = None):
        clean = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError("negative exponent")
            c = _gr(c)
            if c:
                clean[(int(i), int(j))] = c
        self.terms: dict[Exponent, GaussianRational] = clean

    @classmethod
    def _make(cls, terms: dict) -> "BivariatePolynomial":
        obj = object.__new__(cls)
        obj.terms = {k: c for k, c in terms.items() if c}
        return obj

    # -- constructors ----------------------------------------------------------

    @classmethod
    def x(cls) -> "BivariatePolynomial":
        return cls._make({(1, 0): ONE})

    @classmethod
    def y(cls) -> "BivariatePolynomial":
        return cls._make({(0, 1): ONE})

    @classmethod
    def const(cls, c) -> "BivariatePolynomial":
        return cls._make({(0, 0): _gr(c)})

    @classmethod
    def zero(cls) -> "BivariatePolynomial":
        return cls._make({})

    @classmethod
    def monomial(cls, c, i: int, j: int) -> "BivariatePolynomial":
        return cls._make({(i, j): _gr(c)})

    @classmethod
    def linear(cls, a, b) -> "BivariatePolynomial":
        """``a*x + b*y``."""
        return cls._make({(1, 0): _gr(a), (0, 1): _gr(b)})

    # -- inspection ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coeff(self, i: int, j: int) -> GaussianRational:
        return self.terms.get((i, j), ZERO)

    def order(self) -> int:
        """Lowest total degree of a nonzero term (the multiplicity at 0)."""
        if not self.terms:
            raise ZeroPolynomial("order of the zero polynomial is undefined")
        return min(i + j for i, j in self.terms)

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(i + j for i, j in self.terms)

    def degree_in(self, var: str) -> int:
        idx = 0 if var == "x" else 1
        return max((e[idx] for e in self.terms), default=-1)

    def homogeneous_part(self, k: int) -> "BivariatePolynomial":
        return BivariatePolynomial._make({e: c for e, c in self.terms.items() if sum(e) == k})

    def constant_term(self) -> GaussianRational:
        return self.coeff(0, 0)

    def __eq__(self, other):
        if isinstance(other, BivariatePolynomial):
            return self.terms == other.terms
        try:
            return self.terms == BivariatePolynomial.const(_gr(other)).terms
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- arithmetic ------------------------------------------------------------

    def _coerce(self, other) -> "BivariatePolynomial":
        if isinstance(other, BivariatePolynomial):
            return other
        return BivariatePolynomial.const(_gr(other))

    def __add__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, ZERO) + c
        return BivariatePolynomial._make(out)

    __radd__ = __add__

    def __neg__(self):
        return BivariatePolynomial._make({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        out: dict = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in o.terms.items():
                e = (i1 + i2, j1 + j2)
                out[e] = out.get(e, ZERO) + c1 * c2
        return BivariatePolynomial._make(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = BivariatePolynomial.const(ONE)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "BivariatePolynomial":
        c = _gr(c)
        return BivariatePolynomial._make({e: a * c for e, a in self.terms.items()})

    def diff(self, var: str) -> "BivariatePolynomial":
        out = {}
        for (i, j), c in self.terms.items():
            if var == "x" and i:
                out[(i - 1, j)] = c * i
            elif var == "y" and j:
                out[(i, j - 1)] = c * j
        return BivariatePolynomial._make(out)

    # -- monomial factors ------------------------------------------------------

    def power_dividing(self, var: str) -> int:
        """Largest k with ``var**k`` dividing the polynomial."""
        if not self.terms:
            raise ZeroPolynomial("every power divides zero")
        idx = 0 if var == "x" else 1
        return min(e[idx] for e in self.terms)

    def divide_monomial(self, i: int, j: int) -> "BivariatePolynomial":
        out = {}
        for (a, b), c in self.terms.items():
            if a < i or b < j:
                raise ValueError(f"x^{i} y^{j} does not divide the polynomial")
            out[(a - i, b - j)] = c
        return BivariatePolynomial._make(out)

    # -- evaluation and substitution ------------------------------------------

    def evaluate(self, a, b) -> GaussianRational:
        a, b = _gr(a), _gr(b)
        acc = ZERO
        for (i, j), c in self.terms.items():
            acc = acc + c * (a ** i) * (b ** j)
        return acc

    def restrict(self, var: str, value=0) -> list[GaussianRational]:
        """Coefficient list of the univariate restriction ``var = value``.

        ``restrict("x")`` gives ``p(0, y)`` as coefficients in y.
        """
        value = _gr(value)
        if var == "x":
            n = self.degree_in("y")
            out = [ZERO] * (n + 1)
            for (i, j), c in self.terms.items():
                out[j] = out[j] + c * value ** i
        else:
            n = self.degree_in("x")
            out = [ZERO] * (n + 1)
            for (i, j), c in self.terms.items():
                out[i] = out[i] + c * value ** j
        while out and not out[-1]:
            out.pop()
        return out

    def substitute(self, X: "BivariatePolynomial", Y: "BivariatePolynomial") -> "BivariatePolynomial":
        """The composition ``p(X(x, y), Y(x, y))``."""
        if not self.terms:
            return BivariatePolynomial.zero()
        xpow = [BivariatePolynomial.const(ONE)]
        ypow = [BivariatePolynomial.const(ONE)]
        for _ in range(self.degree_in("x")):
            xpow.append(xpow[-1] * X)
        for _ in range(self.degree_in("y")):
            ypow.append(ypow[-1] * Y)
        acc: dict = {}
        for (i, j), c in self.terms.items():
            for e, d in (xpow[i] * ypow[j]).terms.items():
                acc[e] = acc.get(e, ZERO) + c * d
        return BivariatePolynomial._make(acc)

    def translate(self, a, b) -> "BivariatePolynomial":
        """``p(x + a, y + b)``."""
        a, b = _gr(a), _gr(b)
        if not a and not b:
            return self
        X = BivariatePolynomial._make({(1, 0): ONE, (0, 0): a})
        Y = BivariatePolynomial._make({(0, 1): ONE, (0, 0): b})
        return self.substitute(X, Y)

    def eval_series(self, sx: TruncatedSeries, sy: TruncatedSeries) -> TruncatedSeries:
        """``p(sx(t), sy(t))`` as a truncated series."""
        if not self.terms:
            return TruncatedSeries.zero(min(sx.prec, sy.prec))
        # Horner in y over the coefficient series c_j(sx)
        rows: dict[int, dict[int, GaussianRational]] = {}
        for (i, j), c in self.terms.items():
            rows.setdefault(j, {})[i] = c
        dx = self.degree_in("x")
        xpow: list = [None] * (dx + 1)
        if dx:
            xpow[1] = sx
            for k in range(2, dx + 1):
                xpow[k] = series_mul(xpow[k - 1], sx)

        def row_series(row: dict) -> TruncatedSeries:
            # the constant term is exact; powers of sx carry their own precision
            prec = min((xpow[i].prec for i in row if i), default=None)
            if prec is None:
                prec = max(sx.prec, sy.prec)
            acc = [ZERO] * prec
            for i, c in row.items():
                if i == 0:
                    acc[0] = acc[0] + c
                    continue
                cs = xpow[i].coeffs
                for k in range(prec):
                    if cs[k]:
                        acc[k] = acc[k] + c * cs[k]
            return TruncatedSeries(acc, prec)

        dy = max(rows)
        acc = row_series(rows[dy]) if dy in rows else None
        for j in range(dy - 1, -1, -1):
            acc = series_mul(acc, sy)
            if j in rows:
                r = row_series(rows[j])
                n = min(acc.prec, r.prec)
                acc = TruncatedSeries([a + b for a, b in zip(acc.coeffs[:n], r.coeffs[:n])], n)
        return acc

    # -- gcd and factor structure (delegated to sympy's QQ_I domain) -----------

    def to_sympy(self) -> sympy.Poly:
        return sympy.Poly.from_dict(
            {e: to_sympy(c) for e, c in self.terms.items()} or {(0, 0): 0}, _X, _Y, domain="QQ_I"
        )

    @classmethod
    def from_sympy(cls, p: sympy.Poly) -> "BivariatePolynomial":
        gens = p.gens
        if len(gens) == 1:
            # univariate result in x or y
            idx = 0 if gens[0] == _X else 1
            terms = {}
            for (k,), c in p.rep.to_dict().items():
                terms[(k, 0) if idx == 0 else (0, k)] = from_domain(c)
            return cls._make(terms)
        return cls._make({(int(i), int(j)): from_domain(c) for (i, j), c in p.rep.to_dict().items()})

    def gcd(self, other: "BivariatePolynomial") -> "BivariatePolynomial":
        """Monic-normalized gcd (leading coefficient 1 in lex order)."""
        if not self.terms:
            return other.monic()
        if not other.terms:
            return self.monic()
        g = BivariatePolynomial.from_sympy(self.to_sympy().gcd(other.to_sympy()))
        return g.monic()

    def exquo(self, other: "BivariatePolynomial") -> "BivariatePolynomial":
        """Exact quotient; raises ``ValueError`` if ``other`` does not divide."""
        q, r = self.to_sympy().div(other.to_sympy())
        if not r.is_zero:
            raise ValueError("inexact polynomial division")
        return BivariatePolynomial.from_sympy(q)

    def monic(self) -> "BivariatePolynomial":
        if not self.terms:
            return self
        lead = self.terms[max(self.terms)]
        return self.scale(lead.inverse())

    def is_unit(self) -> bool:
        return self.degree() == 0

    def is_square_free(self) -> bool:
        if self.degree() <= 0:
            return True
        _, factors = self.to_sympy().sqf_list()
        return all(m == 1 for _, m in factors)

    # -- display ---------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self.terms.items(), key=lambda t: (sum(t[0]), -t[0][0])):
            mono = "*".join(
                s for s in (_pw("x", i), _pw("y", j)) if s
            )
            cs = str(c)
            if c.is_real() or not c.re:
                neg = (c.re < 0) if c.is_real() else (c.im < 0)
                mag = str(-c) if neg else cs
                sign = "-" if neg else "+"
            else:
                mag, sign = f"({cs})", "+"
            if mono:
                body = mono if mag == "1" else f"{mag}*{mono}"
            else:
                body = mag
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"BivariatePolynomial({self})"


def _pw(v: str, k: int) -> str:
    if k == 0:
        return ""
    if k == 1:
        return v
    return f"{v}^{k}"


def poly_order(p: BivariatePolynomial) -> int:
    """Multiplicity of ``p`` at the origin (its lowest total degree)."""
    return p.order()
