"""Exact Laurent polynomials in s = Q**(1/2) = exp(u/2)."""
from fractions import Fraction
from math import factorial

from ..errors import ArgumentError, NotInvertibleError

Rational = Fraction


def _frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


class SPoly:
    """A finite sum of c_m * s**m with rational c_m; no zero coefficient is stored."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for e, v in dict(coeffs).items():
                v = _frac(v)
                if v:
                    c[int(e)] = v
        self._c = c

    @classmethod
    def const(cls, value):
        return cls({0: value})

    @classmethod
    def monomial(cls, exponent, coeff=1):
        return cls({exponent: coeff})

    @staticmethod
    def _coerce(other):
        if isinstance(other, SPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return SPoly.const(other)
        return None

    # container protocol

    def coefficients(self):
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def coefficient(self, exponent):
        return self._c.get(exponent, Fraction(0))

    def __bool__(self):
        return bool(self._c)

    def is_zero(self):
        return not self._c

    def is_constant(self):
        return not self._c or set(self._c) == {0}

    def is_monomial(self):
        return len(self._c) == 1

    def degree(self):
        return max(self._c) if self._c else None

    def low_degree(self):
        return min(self._c) if self._c else None

    # arithmetic

    def __neg__(self):
        return SPoly({e: -v for e, v in self._c.items()})

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        c = dict(self._c)
        for e, v in o._c.items():
            c[e] = c.get(e, 0) + v
        return SPoly(c)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SPoly({e: v * other for e, v in self._c.items()})
        if not isinstance(other, SPoly):
            return NotImplemented
        c = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return SPoly(c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division of SPoly by zero")
            return self * (Fraction(1) / _frac(other))
        if isinstance(other, SPoly) and other.is_monomial():
            return self * other.inverse()
        return NotImplemented

    def inverse(self):
        """Exact inverse; only monomials are units in this ring."""
        if not self.is_monomial():
            raise NotInvertibleError("%r is not a unit of Q[s, 1/s]" % (self,))
        (e, v), = self._c.items()
        return SPoly({-e: 1 / v})

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = SPoly.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def reflect(self):
        """Substitute s -> 1/s (equivalently u -> -u)."""
        return SPoly({-e: v for e, v in self._c.items()})

    def shift(self, k):
        """Multiply by s**k."""
        return SPoly({e + k: v for e, v in self._c.items()})

    # u-expansion

    def u_coefficient(self, j):
        """Coefficient of u**j in the expansion s**m = exp(m u / 2)."""
        total = sum((v * Fraction(e) ** j for e, v in self._c.items()), Fraction(0))
        return total / (2 ** j * factorial(j))

    def u_valuation(self):
        """Order of vanishing at u = 0; None for the zero polynomial."""
        if not self._c:
            return None
        # a nonzero combination of n distinct exponentials vanishes to order < n
        for j in range(len(self._c)):
            if self.u_coefficient(j):
                return j
        raise AssertionError("unreachable: Vandermonde bound violated")

    def __repr__(self):
        if not self._c:
            return "0"
        out = []
        for e, v in sorted(self._c.items(), reverse=True):
            mono = "" if e == 0 else ("s" if e == 1 else "s^%d" % e)
            if mono and v == 1:
                term = mono
            elif mono and v == -1:
                term = "-" + mono
            else:
                term = str(v) + ("*" + mono if mono else "")
            out.append(term)
        return " + ".join(out).replace("+ -", "- ")


s = SPoly.monomial(1)


def sinh_factor(k):
    """2 sinh(k u / 2) written exactly as s**k - s**(-k)."""
    if k < 1:
        raise ArgumentError("sinh_factor needs k >= 1, got %r" % (k,))
    return SPoly({k: 1, -k: -1})


def hook_product(hook_lengths):
    """prod over hooks h of (s**h - s**(-h))."""
    out = SPoly.const(1)
    for h in hook_lengths:
        out = out * sinh_factor(h)
    return out
