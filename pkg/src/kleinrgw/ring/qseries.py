"""Generating functions in q truncated at a maximal degree, with exp and log."""
from fractions import Fraction

from ..errors import ArgumentError
from .scalar import Scalar
from .useries import USeries


def is_zero(x):
    if isinstance(x, (int, Fraction)):
        return x == 0
    return x.is_zero()


def _agree(a, b, upto=None):
    if isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction)):
        return a == b
    if isinstance(a, (int, Fraction)):
        a, b = b, a
    if isinstance(a, (USeries, Scalar)):
        return a.agrees(b, upto) if isinstance(a, USeries) else a.agrees(b, upto)
    if isinstance(b, (USeries, Scalar)):
        return _agree(b, a, upto)
    return a == b


class QSeries:
    """constant + sum_{d=1}^{dmax} c_d q**d with coefficients in any of the exact rings."""

    __slots__ = ("coeffs", "dmax", "constant")

    def __init__(self, coeffs, dmax, constant=0):
        if dmax < 0:
            raise ArgumentError("dmax must be non-negative")
        self.dmax = dmax
        self.constant = Fraction(constant)
        self.coeffs = {}
        for d, c in dict(coeffs).items():
            if d < 1:
                raise ArgumentError("q-degrees start at 1; use the constant term for q^0")
            if d <= dmax and not is_zero(c):
                self.coeffs[d] = c

    def __getitem__(self, d):
        if d == 0:
            return self.constant
        if d > self.dmax:
            raise IndexError("q^%d is beyond dmax=%d" % (d, self.dmax))
        return self.coeffs.get(d, 0)

    def degrees(self):
        return sorted(self.coeffs)

    def truncate(self, dmax):
        return QSeries(self.coeffs, min(dmax, self.dmax), self.constant)

    def map(self, fn):
        return QSeries({d: fn(c) for d, c in self.coeffs.items()}, self.dmax, self.constant)

    def __add__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        dmax = min(self.dmax, other.dmax)
        out = {}
        for d in range(1, dmax + 1):
            a, b = self.coeffs.get(d), other.coeffs.get(d)
            if a is None and b is None:
                continue
            out[d] = b if a is None else (a if b is None else a + b)
        return QSeries(out, dmax, self.constant + other.constant)

    def __neg__(self):
        return QSeries({d: -c for d, c in self.coeffs.items()}, self.dmax, -self.constant)

    def __sub__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self + (-other)

    def scale(self, factor):
        return QSeries({d: c * factor for d, c in self.coeffs.items()}, self.dmax, self.constant * factor)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        dmax = min(self.dmax, other.dmax)
        out = {}

        def put(n, x):
            out[n] = out[n] + x if n in out else x

        for d, c in self.coeffs.items():
            if other.constant:
                put(d, c * other.constant)
        for d, c in other.coeffs.items():
            if self.constant:
                put(d, c * self.constant)
        for d1, c1 in self.coeffs.items():
            for d2, c2 in other.coeffs.items():
                if d1 + d2 <= dmax:
                    put(d1 + d2, c1 * c2)
        return QSeries(out, dmax, self.constant * other.constant)

    __rmul__ = __mul__

    def agrees(self, other, upto=None):
        if self.constant != other.constant:
            return False
        dmax = min(self.dmax, other.dmax)
        for d in range(1, dmax + 1):
            a, b = self.coeffs.get(d, 0), other.coeffs.get(d, 0)
            if is_zero(a) and is_zero(b):
                continue
            if is_zero(a):
                a, b = b, a
            if not _agree(a, b, upto):
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return (self.dmax, self.constant, self.coeffs) == (other.dmax, other.constant, other.coeffs)

    def __repr__(self):
        body = ", ".join("q^%d: %r" % (d, self.coeffs[d]) for d in self.degrees())
        return "QSeries(%s; %s; dmax=%d)" % (self.constant, body, self.dmax)


def _accumulate(terms):
    total = None
    for x in terms:
        total = x if total is None else total + x
    return total


def exp_q(f):
    """exp of a series without constant term, via n g_n = sum_k k f_k g_{n-k}."""
    if f.constant != 0:
        raise ArgumentError("exp_q needs a zero constant term, got %s" % f.constant)
    g = {}
    for n in range(1, f.dmax + 1):
        pieces = []
        for k in range(1, n + 1):
            fk = f.coeffs.get(k)
            if fk is None:
                continue
            if k == n:
                pieces.append(fk * k)
            elif n - k in g:
                pieces.append(fk * g[n - k] * k)
        total = _accumulate(pieces)
        if total is not None:
            g[n] = total * Fraction(1, n)
    return QSeries(g, f.dmax, 1)


def log_q(g):
    """log of a series with constant term 1, inverting the exp_q recursion."""
    if g.constant != 1:
        raise ArgumentError("log_q needs constant term 1, got %s" % g.constant)
    f = {}
    for n in range(1, g.dmax + 1):
        pieces = []
        gn = g.coeffs.get(n)
        if gn is not None:
            pieces.append(gn * n)
        for k in range(1, n):
            if k in f and n - k in g.coeffs:
                pieces.append(-(f[k] * g.coeffs[n - k] * k))
        total = _accumulate(pieces)
        if total is not None:
            f[n] = total * Fraction(1, n)
    return QSeries(f, g.dmax, 0)


def q_monomial_series(terms, dmax):
    """Build a QSeries from (degree, coefficient) pairs, summing repeated degrees."""
    out = {}
    for d, c in terms:
        if 1 <= d <= dmax:
            out[d] = out[d] + c if d in out else c
    return QSeries(out, dmax)


__all__ = ["QSeries", "exp_q", "log_q", "q_monomial_series", "is_zero"]
