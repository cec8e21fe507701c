"""Laurent polynomials in the equivariant parameter t."""
from fractions import Fraction

from ..errors import NotInvertibleError
from .spoly import SPoly
from .useries import USeries, invert_u, to_u_series

_RING = (SPoly, USeries)


def _is_zero(c):
    return c.is_zero()


def _lift(c):
    if isinstance(c, _RING):
        return c
    if isinstance(c, (int, Fraction)):
        return SPoly.const(c)
    raise TypeError("not a scalar coefficient: %r" % (c,))


class Scalar:
    """sum over n of t**n * c_n with c_n exact (SPoly) or u-expanded (USeries)."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        out = {}
        if terms:
            for e, c in dict(terms).items():
                c = _lift(c)
                if not _is_zero(c):
                    out[int(e)] = c
        self._terms = out

    @classmethod
    def const(cls, value):
        return cls({0: value})

    @classmethod
    def t_power(cls, n, coeff=1):
        return cls({n: coeff})

    @classmethod
    def coerce(cls, x):
        if isinstance(x, Scalar):
            return x
        if isinstance(x, _RING + (int, Fraction)):
            return cls({0: x})
        return None

    # inspection

    def terms(self):
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def t_exponents(self):
        return sorted(self._terms)

    def coefficient(self, n=0):
        return self._terms.get(n, SPoly())

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_t_free(self):
        return set(self._terms) <= {0}

    def is_exact(self):
        return all(isinstance(c, SPoly) for c in self._terms.values())

    def precision(self):
        """Smallest u-order among series coefficients, or None if exact."""
        orders = [c.order for c in self._terms.values() if isinstance(c, USeries)]
        return min(orders) if orders else None

    # arithmetic

    def __neg__(self):
        return Scalar({e: -c for e, c in self._terms.items()})

    def __add__(self, other):
        o = Scalar.coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in o._terms.items():
            out[e] = out[e] + c if e in out else c
        return Scalar(out)

    __radd__ = __add__

    def __sub__(self, other):
        o = Scalar.coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = Scalar.coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Scalar()
            return Scalar({e: c * other for e, c in self._terms.items()})
        o = Scalar.coerce(other)
        if o is None:
            return NotImplemented
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in o._terms.items():
                prod = c1 * c2
                out[e1 + e2] = out[e1 + e2] + prod if e1 + e2 in out else prod
        return Scalar(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        o = Scalar.coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def inverse(self, order=None):
        """Inverse of a single-t-term scalar.

        Exact monomial coefficients invert exactly; any other coefficient is
        inverted in the u-series ring (to ``order`` when it is exact).
        """
        if len(self._terms) != 1:
            raise NotInvertibleError("only a single power of t times a unit is invertible: %r" % (self,))
        (e, c), = self._terms.items()
        if isinstance(c, SPoly) and c.is_monomial():
            return Scalar({-e: c.inverse()})
        return Scalar({-e: invert_u(c, order)})

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = Scalar.const(1), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def power(self, n, order=None):
        """``self ** n`` with the u-order used if a non-unit must be inverted."""
        if n < 0:
            return self.inverse(order) ** (-n)
        return self ** n

    # comparison and conversion

    def __eq__(self, other):
        o = Scalar.coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def agrees(self, other, upto=None):
        """Equality that tolerates differing u-truncations on series coefficients."""
        o = Scalar.coerce(other)
        if o is None:
            return False
        for e in set(self._terms) | set(o._terms):
            a = self._terms.get(e, SPoly())
            b = o._terms.get(e, SPoly())
            if isinstance(a, SPoly) and isinstance(b, SPoly):
                if a != b:
                    return False
                continue
            if isinstance(a, SPoly):
                a, b = b, a
            if not a.agrees(b, upto):
                return False
        return True

    def to_u(self, order):
        return Scalar({e: to_u_series(c, order) for e, c in self._terms.items()})

    def map_coefficients(self, fn):
        return Scalar({e: fn(c) for e, c in self._terms.items()})

    def reflect(self):
        """Substitute u -> -u (s -> 1/s) in every coefficient."""
        return self.map_coefficients(lambda c: c.reflect())

    def substitute_t(self, factor):
        """Substitute t -> factor * t for a rational ``factor`` (e.g. -1)."""
        return Scalar({e: c * Fraction(factor) ** e for e, c in self._terms.items()})

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            mono = "" if e == 0 else ("t" if e == 1 else "t^%d" % e)
            text = repr(c)
            if mono:
                parts.append("(%s)*%s" % (text, mono) if text != "1" else mono)
            else:
                parts.append(text)
        return " + ".join(parts)


t = Scalar.t_power(1)
