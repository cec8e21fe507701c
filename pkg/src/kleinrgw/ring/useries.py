"""
Truncated Laurent series in u with exact rational coefficients.

A :class:`USeries` knows every coefficient of u**j for j <= ``order`` and
nothing beyond.  Precision is tracked the way p-adic or power-series
libraries do it: a product of a series known to order Na with valuation va
and one known to Nb with valuation vb is known to min(Na + vb, Nb + va).
Nothing is silently padded with zeros.
"""
from fractions import Fraction

from ..errors import NotInvertibleError, TruncationError
from .spoly import SPoly

DEFAULT_U_ORDER = 24


class USeries:
    __slots__ = ("start", "coeffs", "order")

    def __init__(self, coeffs, start=0, order=DEFAULT_U_ORDER):
        coeffs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        keep = max(0, min(len(coeffs), order - start + 1))
        coeffs = coeffs[:keep]
        lead = 0
        while lead < len(coeffs) and not coeffs[lead]:
            lead += 1
        coeffs = coeffs[lead:]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.start = start + lead if coeffs else order + 1
        self.coeffs = coeffs
        self.order = order

    @classmethod
    def const(cls, value, order=DEFAULT_U_ORDER):
        return cls([value], 0, order)

    @classmethod
    def zero(cls, order=DEFAULT_U_ORDER):
        return cls([], 0, order)

    @classmethod
    def from_dict(cls, terms, order):
        if not terms:
            return cls.zero(order)
        lo = min(terms)
        hi = max(terms)
        return cls([terms.get(j, 0) for j in range(lo, hi + 1)], lo, order)

    # inspection

    @property
    def valuation(self):
        """Exponent of the lowest nonzero term, or order + 1 if none is known."""
        return self.start

    def is_zero(self):
        """True when no nonzero coefficient is known up to ``order``."""
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def coefficient(self, j):
        if j > self.order:
            raise TruncationError("u^%d is beyond the known order %d" % (j, self.order))
        i = j - self.start
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def terms(self):
        return {self.start + i: c for i, c in enumerate(self.coeffs) if c}

    def truncate(self, order):
        if order > self.order:
            raise TruncationError("cannot raise order from %d to %d" % (self.order, order))
        return USeries(self.coeffs, self.start, order)

    # coercion

    def _coerce(self, other, order):
        if isinstance(other, USeries):
            return other
        if isinstance(other, SPoly):
            return to_u_series(other, order)
        if isinstance(other, (int, Fraction)):
            return USeries.const(other, order)
        return None

    # arithmetic

    def __neg__(self):
        return USeries([-c for c in self.coeffs], self.start, self.order)

    def __add__(self, other):
        o = self._coerce(other, self.order)
        if o is None:
            return NotImplemented
        order = min(self.order, o.order)
        terms = self.terms()
        for j, c in o.terms().items():
            terms[j] = terms.get(j, 0) + c
        return USeries.from_dict({j: c for j, c in terms.items() if j <= order}, order)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other, self.order)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other, self.order)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return USeries([c * other for c in self.coeffs], self.start, self.order)
        if isinstance(other, SPoly):
            if other.is_zero():
                return USeries.zero(self.order)
            if other.is_constant():
                return self * other.coefficient(0)
            v = other.u_valuation()
            other = to_u_series(other, self.order - self.start + v)
        if not isinstance(other, USeries):
            return NotImplemented
        order = min(self.order + other.start, other.order + self.start)
        a, b = self.coeffs, other.coeffs
        start = self.start + other.start
        n = max(0, order - start + 1)
        out = [Fraction(0)] * min(n, max(len(a) + len(b) - 1, 0))
        for i, x in enumerate(a):
            if i >= n:
                break
            for k, y in enumerate(b[: n - i]):
                out[i + k] += x * y
        return USeries(out, start, order)

    __rmul__ = __mul__

    def inverse(self):
        if not self.coeffs:
            raise NotInvertibleError("leading coefficient unknown or zero up to u^%d" % self.order)
        v = self.start
        rel = self.order - v
        c = self.coeffs + [Fraction(0)] * max(0, rel + 1 - len(self.coeffs))
        inv0 = 1 / c[0]
        b = [inv0]
        for n in range(1, rel + 1):
            acc = sum((c[k] * b[n - k] for k in range(1, n + 1)), Fraction(0))
            b.append(-inv0 * acc)
        return USeries(b, -v, self.order - 2 * v)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        if isinstance(other, SPoly):
            other = to_u_series(other, self.order - self.start + 2 * (other.u_valuation() or 0))
        if isinstance(other, USeries):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        o = self._coerce(other, self.order)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return USeries.const(1, self.order - self.start)
        result, base = None, self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def reflect(self):
        """Substitute u -> -u."""
        return USeries([c if (self.start + i) % 2 == 0 else -c for i, c in enumerate(self.coeffs)],
                       self.start, self.order)

    def __eq__(self, other):
        if not isinstance(other, USeries):
            return NotImplemented
        return (self.order, self.start, self.coeffs) == (other.order, other.start, other.coeffs)

    def __hash__(self):
        return hash((self.order, self.start, tuple(self.coeffs)))

    def agrees(self, other, upto=None):
        """Equality of all coefficients known on both sides (optionally only up to ``upto``)."""
        if isinstance(other, SPoly):
            other = to_u_series(other, self.order)
        elif isinstance(other, (int, Fraction)):
            other = USeries.const(other, self.order)
        top = min(self.order, other.order)
        if upto is not None:
            if upto > top:
                raise TruncationError("cannot compare up to u^%d; known only to u^%d" % (upto, top))
            top = upto
        lo = min(self.start, other.start)
        return all(self.coefficient(j) == other.coefficient(j) for j in range(lo, top + 1))

    def __repr__(self):
        parts = []
        for j, c in sorted(self.terms().items()):
            mono = "" if j == 0 else ("u" if j == 1 else "u^%d" % j)
            parts.append(str(c) + ("*" + mono if mono else ""))
        body = " + ".join(parts) if parts else "0"
        return "%s + O(u^%d)" % (body.replace("+ -", "- "), self.order + 1)


def to_u_series(p, order=DEFAULT_U_ORDER):
    """Expand an exact Laurent polynomial in s = exp(u/2) up to and including u**order."""
    if isinstance(p, USeries):
        return p.truncate(order)
    if isinstance(p, (int, Fraction)):
        return USeries.const(p, order)
    if order < 0:
        return USeries.zero(order)
    items = p.items()
    out = [Fraction(0)] * (order + 1)
    for e, v in items:
        if e == 0:
            out[0] += v
            continue
        half = Fraction(e, 2)
        term = v
        for j in range(order + 1):
            out[j] += term
            term = term * half / (j + 1)
    return USeries(out, 0, order)


def invert_u(x, order=None):
    """Multiplicative inverse in the u-series ring.

    Exact Laurent polynomials are expanded with enough extra terms that the
    inverse is known through u**order (default: the global truncation).
    """
    if isinstance(x, USeries):
        return x.inverse()
    if isinstance(x, SPoly):
        if x.is_zero():
            raise NotInvertibleError("zero is not invertible")
        order = DEFAULT_U_ORDER if order is None else order
        v = x.u_valuation()
        return to_u_series(x, order + 2 * v).inverse()
    if isinstance(x, (int, Fraction)):
        if not x:
            raise NotInvertibleError("zero is not invertible")
        return USeries.const(Fraction(1) / Fraction(x), DEFAULT_U_ORDER if order is None else order)
    raise TypeError("cannot invert %r" % (x,))

