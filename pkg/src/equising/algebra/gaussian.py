"""Exact Gaussian rationals, the coefficient field Q(i)."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
import numbers


def _reduce(a: int, b: int, d: int) -> tuple[int, int, int]:
    if d == 0:
        raise ZeroDivisionError("Gaussian rational with zero denominator")
    if d < 0:
        a, b, d = -a, -b, -d
    g = gcd(gcd(a, b), d)
    if g != 1:
        a //= g
        b //= g
        d //= g
    return a, b, d


class GaussianRational:
    """An element ``(a + b*i) / d`` of Q(i) held in lowest terms.

    ``re`` and ``im`` are exposed as :class:`fractions.Fraction`. Instances are
    immutable and hashable; comparison with ints and Fractions works as for
    complex numbers with zero imaginary part.
    """

    __slots__ = ("_a", "_b", "_d", "_hash")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            if im:
                raise TypeError("imaginary part must be rational")
            self._a, self._b, self._d = re._a, re._b, re._d
            self._hash = None
            return
        re = Fraction(re)
        im = Fraction(im)
        d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        a = re.numerator * (d // re.denominator)
        b = im.numerator * (d // im.denominator)
        self._a, self._b, self._d = _reduce(a, b, d)
        self._hash = None

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> "GaussianRational":
        obj = object.__new__(cls)
        obj._a, obj._b, obj._d = _reduce(a, b, d)
        obj._hash = None
        return obj

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, complex):
            raise TypeError("floating complex values are not exact")
        if isinstance(value, (int, Fraction)):
            return cls(value)
        raise TypeError(f"cannot coerce {value!r} to GaussianRational")

    # -- parts -----------------------------------------------------------------

    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    def is_zero(self) -> bool:
        return self._a == 0 and self._b == 0

    def is_real(self) -> bool:
        return self._b == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        """``|z|**2``, a non-negative rational."""
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        if self._d == o._d:
            return GaussianRational._raw(self._a + o._a, self._b + o._b, self._d)
        return GaussianRational._raw(
            self._a * o._d + o._a * self._d, self._b * o._d + o._b * self._d, self._d * o._d
        )

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational._raw(-self._a, -self._b, self._d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, e = self._a, self._b, o._a, o._b
        return GaussianRational._raw(a * c - b * e, a * e + b * c, self._d * o._d)

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        n = self._a * self._a + self._b * self._b
        # d / (a + bi) = d (a - bi) / n
        return GaussianRational._raw(self._d * self._a, -self._d * self._b, n)

    def __truediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison ------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self._a == other._a and self._b == other._b and self._d == other._d
        if isinstance(other, (int, Fraction)):
            return self._b == 0 and Fraction(self._a, self._d) == other
        if isinstance(other, numbers.Number):
            return False
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self._b == 0:
                self._hash = hash(Fraction(self._a, self._d))
            else:
                self._hash = hash((self._a, self._b, self._d))
        return self._hash

    def sort_key(self) -> tuple[Fraction, Fraction]:
        return (self.re, self.im)

    # -- roots -----------------------------------------------------------------

    def nth_roots(self, n: int) -> list["GaussianRational"]:
        """All n-th roots lying in Q(i), principal root first."""
        if n < 1:
            raise ValueError("root index must be positive")
        if self.is_zero():
            return [ZERO]
        return list(_nth_roots(self, n))

    def nth_root(self, n: int) -> "GaussianRational":
        """The principal n-th root.

        Among the roots in Q(i) the principal one has the largest real part,
        ties broken by the larger imaginary part.

        Raises
        ------
        IrrationalLeadingRoot
            if no n-th root lies in Q(i).
        """
        from ..errors import IrrationalLeadingRoot

        roots = self.nth_roots(n)
        if not roots:
            raise IrrationalLeadingRoot(
                f"{self} has no {n}-th root in Q(i)", datum=str(self), degree=n
            )
        return roots[0]

    # -- display ---------------------------------------------------------------

    def __str__(self):
        re, im = self.re, self.im
        if im == 0:
            return str(re)
        if re == 0:
            return _imag_str(im)
        sign = "+" if im > 0 else "-"
        return f"{re} {sign} {_imag_str(abs(im))}"

    def __repr__(self):
        return f"GaussianRational({self.re!s}, {self.im!s})"


def _imag_str(im: Fraction) -> str:
    if im == 1:
        return "i"
    if im == -1:
        return "-i"
    return f"{im}*i"


ZERO = GaussianRational._raw(0, 0, 1)
ONE = GaussianRational._raw(1, 0, 1)
I = GaussianRational._raw(0, 1, 1)

#: the roots of unity contained in Q(i)
UNITS = (ONE, I, -ONE, -I)


def _int_root(m: int, n: int):
    """Exact integer n-th root of m >= 0, or None."""
    if m < 2:
        return m
    r = round(m ** (1.0 / n)) if m.bit_length() < 1000 else None
    if r is not None:
        for c in (r - 1, r, r + 1):
            if c >= 0 and c ** n == m:
                return c
        if m.bit_length() < 50:
            return None
    lo, hi = 0, 1 << (m.bit_length() // n + 1)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** n < m:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo ** n == m else None


@lru_cache(maxsize=4096)
def _nth_roots(c: GaussianRational, n: int) -> tuple[GaussianRational, ...]:
    if n == 1:
        return (c,)
    # fast path: positive rational with rational real root
    if c._b == 0 and c._a > 0:
        ra, rd = _int_root(c._a, n), _int_root(c._d, n)
        if ra is not None and rd is not None:
            r = GaussianRational._raw(ra, 0, rd)
            roots = [r * u for u in UNITS if (u ** n) == ONE]
            return tuple(sorted(set(roots), key=lambda z: (z.re, z.im), reverse=True))
    # the norm of a root is the n-th root of the norm
    nrm = c.norm()
    if _int_root(nrm.numerator, n) is None or _int_root(nrm.denominator, n) is None:
        return ()
    from .univariate import roots_in_qi

    coeffs = [-c] + [ZERO] * (n - 1) + [ONE]
    roots, _ = roots_in_qi(coeffs)
    return tuple(sorted(set(roots), key=lambda z: (z.re, z.im), reverse=True))
