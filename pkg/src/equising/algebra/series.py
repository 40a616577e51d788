"""Truncated univariate formal power series over Q(i).

A :class:`TruncatedSeries` is a power series known modulo ``t**prec``: the
coefficients of ``t**0 .. t**(prec-1)`` are certified, everything above is
unknown. Each operation derives the order through which its result is
certified from the orders of its inputs, so a pipeline never reports a
coefficient it has not actually determined.

Precision rules (``N`` = certified order, ``o`` = valuation):

* sum: ``min(Na, Nb)``
* product: ``min(Na + ob, Nb + oa)``; for two units this is ``min(Na, Nb)``
* quotient: ``min(Nn - od, Nd - 2*od + on)``
* composition ``f(g)``: ``min(Nf * og, Ng)``
* n-th root of ``t**(m*n) * unit``: ``Nf - m*(n - 1)``
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import ConstantInner, DegenerateInput, OrderMismatch, OrderNotDivisible, ZeroDivisor
from .gaussian import GaussianRational, ONE, ZERO

DEFAULT_ORDER = 32


def _gr(c) -> GaussianRational:
    return GaussianRational.coerce(c)


class TruncatedSeries:
    """Power series ``sum c_k t**k`` known modulo ``t**prec``."""

    __slots__ = ("coeffs", "prec")

    def __init__(self, coeffs: Iterable = (), prec: int | None = None):
        cs = [_gr(c) for c in coeffs]
        if prec is None:
            prec = len(cs)
        if prec < 0:
            raise ValueError("negative truncation order")
        if len(cs) < prec:
            cs.extend([ZERO] * (prec - len(cs)))
        self.coeffs: tuple[GaussianRational, ...] = tuple(cs[:prec])
        self.prec: int = prec

    @classmethod
    def _make(cls, coeffs: list, prec: int) -> "TruncatedSeries":
        obj = object.__new__(cls)
        if len(coeffs) < prec:
            coeffs = list(coeffs) + [ZERO] * (prec - len(coeffs))
        obj.coeffs = tuple(coeffs[:prec])
        obj.prec = prec
        return obj

    # -- constructors ----------------------------------------------------------

    @classmethod
    def zero(cls, prec: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls._make([], prec)

    @classmethod
    def one(cls, prec: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls.monomial(ONE, 0, prec)

    @classmethod
    def variable(cls, prec: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls.monomial(ONE, 1, prec)

    @classmethod
    def monomial(cls, c, k: int, prec: int = DEFAULT_ORDER) -> "TruncatedSeries":
        cs = [ZERO] * prec
        if k < prec:
            cs[k] = _gr(c)
        return cls._make(cs, prec)

    @classmethod
    def from_dict(cls, terms: dict, prec: int = DEFAULT_ORDER) -> "TruncatedSeries":
        cs = [ZERO] * prec
        for k, c in terms.items():
            if k < prec:
                cs[k] = cs[k] + _gr(c)
        return cls._make(cs, prec)

    # -- inspection ------------------------------------------------------------

    def __getitem__(self, k: int) -> GaussianRational:
        if k < 0:
            raise IndexError(k)
        if k >= self.prec:
            raise IndexError(f"coefficient {k} is beyond the certified order {self.prec}")
        return self.coeffs[k]

    def order(self) -> int | None:
        """Valuation, or ``None`` if the series vanishes to its certified order."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def valuation_bound(self) -> int:
        o = self.order()
        return self.prec if o is None else o

    def leading(self) -> GaussianRational:
        o = self.order()
        if o is None:
            raise DegenerateInput("series vanishes to its certified order")
        return self.coeffs[o]

    def is_zero(self) -> bool:
        return self.order() is None

    def truncate(self, prec: int) -> "TruncatedSeries":
        if prec > self.prec:
            raise ValueError(f"cannot extend certified order {self.prec} to {prec}")
        return TruncatedSeries._make(list(self.coeffs[:prec]), prec)

    def agrees_with(self, other: "TruncatedSeries", through: int | None = None) -> bool:
        """Coefficient equality through the common certified order."""
        n = min(self.prec, other.prec)
        if through is not None:
            n = min(n, through)
        return self.coeffs[:n] == other.coeffs[:n]

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.prec == other.prec and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.prec))

    def __repr__(self):
        terms = [f"({c})*t^{k}" for k, c in enumerate(self.coeffs) if c]
        body = " + ".join(terms) if terms else "0"
        return f"TruncatedSeries({body} + O(t^{self.prec}))"

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.monomial(_gr(other), 0, self.prec)
        n = min(self.prec, other.prec)
        return TruncatedSeries._make([a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])], n)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries._make([-c for c in self.coeffs], self.prec)

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.monomial(_gr(other), 0, self.prec)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        c = _gr(other)
        return TruncatedSeries._make([a * c for a in self.coeffs], self.prec)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_div(self, other)
        inv = _gr(other).inverse()
        return self * inv

    def __pow__(self, k: int):
        return series_pow(self, k)

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by ``t**k`` (``k`` may be negative when the low terms vanish)."""
        if k >= 0:
            return TruncatedSeries._make([ZERO] * k + list(self.coeffs), self.prec + k)
        if any(self.coeffs[: -k]):
            raise OrderMismatch(f"cannot divide by t^{-k}: series has lower-order terms")
        return TruncatedSeries._make(list(self.coeffs[-k:]), self.prec + k)

    def derivative(self) -> "TruncatedSeries":
        n = max(self.prec - 1, 0)
        return TruncatedSeries._make([self.coeffs[k + 1] * (k + 1) for k in range(n)], n)

    def scale_variable(self, c) -> "TruncatedSeries":
        """The series ``f(c*t)``."""
        c = _gr(c)
        out, p = [], ONE
        for a in self.coeffs:
            out.append(a * p)
            p = p * c
        return TruncatedSeries._make(out, self.prec)

    def polynomial_part(self) -> dict[int, GaussianRational]:
        return {k: c for k, c in enumerate(self.coeffs) if c}


# -- kernel operations ---------------------------------------------------------

def _mul_coeffs(a: Sequence, b: Sequence, n: int) -> list:
    """Cauchy product of two coefficient lists, truncated to length n."""
    a_nz = [(i, c) for i, c in enumerate(a[:n]) if c]
    b_nz = [(j, c) for j, c in enumerate(b[:n]) if c]
    out = [ZERO] * n
    if not a_nz or not b_nz:
        return out
    for i, ca in a_nz:
        lim = n - i
        for j, cb in b_nz:
            if j >= lim:
                break
            out[i + j] = out[i + j] + ca * cb
    return out


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product, certified through ``min(Na + ob, Nb + oa)``."""
    prec = min(a.prec + b.valuation_bound(), b.prec + a.valuation_bound())
    return TruncatedSeries._make(_mul_coeffs(a.coeffs, b.coeffs, prec), prec)


def _unit_inverse(v: Sequence, n: int) -> list:
    v0inv = v[0].inverse()
    w = [ZERO] * n
    if n == 0:
        return w
    w[0] = v0inv
    nz = [(j, c) for j, c in enumerate(v[:n]) if c and j > 0]
    for k in range(1, n):
        acc = ZERO
        for j, c in nz:
            if j > k:
                break
            acc = acc + c * w[k - j]
        w[k] = -acc * v0inv
    return w


def series_div(num: TruncatedSeries, den: TruncatedSeries) -> TruncatedSeries:
    """Formal quotient ``num / den``.

    Raises
    ------
    ZeroDivisor
        if ``den`` vanishes through its certified order.
    OrderMismatch
        if ``ord(den) > ord(num)``, i.e. the quotient is not a power series.
    """
    od = den.order()
    if od is None:
        raise ZeroDivisor("denominator vanishes through its certified order")
    on = num.order()
    if on is None:
        prec = max(num.prec - od, 0)
        return TruncatedSeries.zero(prec)
    if on < od:
        raise OrderMismatch(f"ord(den)={od} exceeds ord(num)={on}")
    u = num.coeffs[on:]
    v = den.coeffs[od:]
    n = min(len(u), len(v))
    w = _mul_coeffs(u, _unit_inverse(v, n), n)
    return TruncatedSeries._make([ZERO] * (on - od) + w, on - od + n)


def series_pow(a: TruncatedSeries, k: int) -> TruncatedSeries:
    if k < 0:
        return series_div(TruncatedSeries.one(a.prec), series_pow(a, -k))
    result = None
    base = a
    while k:
        if k & 1:
            result = base if result is None else series_mul(result, base)
        k >>= 1
        if k:
            base = series_mul(base, base)
    if result is None:
        return TruncatedSeries.one(a.prec)
    return result


def series_compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """``outer(inner(t))``, certified through ``min(N_outer * ord(inner), N_inner)``."""
    k = inner.order()
    if k is None:
        k = inner.prec
        if k == 0:
            raise ConstantInner("inner series has no certified coefficients")
    if k == 0:
        raise ConstantInner("inner series has a nonzero constant term")
    prec = min(outer.prec * k, inner.prec)
    nz = [(j, c) for j, c in enumerate(inner.coeffs[:prec]) if c]
    if len(nz) == 1:
        # monomial substitution c*t^k
        (_, c), out, p = nz[0], [ZERO] * prec, ONE
        for j, a in enumerate(outer.coeffs):
            if j * k >= prec:
                break
            out[j * k] = a * p
            p = p * c
        return TruncatedSeries._make(out, prec)
    inner_c = list(inner.coeffs[:prec])
    out = [ZERO] * prec
    power = [ONE] + [ZERO] * (prec - 1)
    for j, a in enumerate(outer.coeffs):
        if j * k >= prec:
            break
        if j > 0:
            power = _mul_coeffs(power, inner_c, prec)
        if a:
            out = [o + a * p for o, p in zip(out, power)]
    return TruncatedSeries._make(out, prec)


def _unit_power(u: Sequence, alpha: Fraction, n: int) -> list:
    """``u**alpha`` for a unit with ``u[0] == 1`` (J.C.P. Miller recurrence)."""
    w = [ZERO] * n
    if n == 0:
        return w
    w[0] = ONE
    a1 = alpha + 1
    nz = [(j, c) for j, c in enumerate(u[:n]) if c and j > 0]
    for k in range(1, n):
        acc = ZERO
        for j, c in nz:
            if j > k:
                break
            acc = acc + c * w[k - j] * GaussianRational(a1 * j - k)
        w[k] = acc * GaussianRational(Fraction(1, k))
    return w


def series_nth_root(f: TruncatedSeries, n: int) -> TruncatedSeries:
    """Principal n-th root ``psi`` with ``psi**n == f`` through the certified order.

    The leading coefficient of ``psi`` is the principal root (see
    :meth:`GaussianRational.nth_root`) of the leading coefficient of ``f``.

    Raises
    ------
    OrderNotDivisible
        if ``ord(f)`` is not a multiple of ``n``.
    IrrationalLeadingRoot
        if the leading coefficient has no n-th root in Q(i).
    """
    if n < 1:
        raise ValueError("root index must be positive")
    o = f.order()
    if o is None:
        raise DegenerateInput("cannot take a root of a series vanishing to its certified order")
    if o % n:
        raise OrderNotDivisible(f"ord(f)={o} is not divisible by {n}")
    c = f.coeffs[o]
    root_c = c.nth_root(n)
    cinv = c.inverse()
    u = [a * cinv for a in f.coeffs[o:]]
    w = _unit_power(u, Fraction(1, n), len(u))
    m = o // n
    return TruncatedSeries._make([ZERO] * m + [root_c * a for a in w], m + len(u))


def unit_root(u: TruncatedSeries, n: int) -> TruncatedSeries:
    """n-th root of a unit whose constant term is 1."""
    if u.prec == 0 or u.coeffs[0] != ONE:
        raise ValueError("unit_root expects constant term 1")
    return TruncatedSeries._make(_unit_power(u.coeffs, Fraction(1, n), u.prec), u.prec)


def series_reverse(w: TruncatedSeries) -> TruncatedSeries:
    """Compositional inverse of a series with ``ord(w) == 1``.

    Uses Lagrange inversion: ``[x^k] psi = (1/k) [t^(k-1)] (t/w)^k``.
    """
    if w.order() != 1:
        raise ValueError("reversion requires a series of order exactly 1")
    prec = w.prec
    g = _unit_inverse(w.coeffs[1:], prec - 1)  # t / w(t)
    out = [ZERO] * prec
    power = [ONE] + [ZERO] * (prec - 2) if prec > 1 else []
    for k in range(1, prec):
        power = _mul_coeffs(power, g, prec - 1)
        out[k] = power[k - 1] * GaussianRational(Fraction(1, k))
    return TruncatedSeries._make(out, prec)
