"""
Partitions of an integer and the combinatorial quantities attached to them.

A :class:`Partition` is an immutable, non-increasing tuple of positive
integers.  Every function here is pure; nothing depends on a character
table.  Partitions of ``d`` are always listed in reverse lexicographic
order, which is the row/column order of every table in the package::

    >>> partitions_of(4)
    [(4), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
"""
from collections import Counter
from functools import lru_cache
from math import factorial, prod

from .errors import ArgumentError, BoundsError

DEFAULT_MAX_DEGREE = 12

_max_degree = DEFAULT_MAX_DEGREE


def max_degree():
    return _max_degree


def set_max_degree(n):
    """Change the largest degree accepted by the table-building functions."""
    global _max_degree
    if n < 1:
        raise BoundsError("maximum degree must be positive, got %r" % (n,))
    _max_degree = int(n)


def check_degree(d, maximum=None):
    limit = _max_degree if maximum is None else maximum
    if not isinstance(d, int) or isinstance(d, bool) or d < 1 or d > limit:
        raise BoundsError("degree must satisfy 1 <= d <= %d, got %r" % (limit, d))
    return d


class Partition(tuple):
    """A partition of ``size`` stored as its non-increasing list of parts."""

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ArgumentError("parts must be positive: %r" % (parts,))
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ArgumentError("parts must be non-increasing: %r" % (parts,))
        return super().__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts):
        """Build a partition from parts given in any order."""
        return cls(sorted(parts, reverse=True))

    @property
    def size(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    def multiplicities(self):
        return dict(Counter(self))

    def __repr__(self):
        return "(" + ", ".join(str(p) for p in self) + ")"

    def __str__(self):
        return repr(self)


def _ensure(lam):
    return lam if isinstance(lam, Partition) else Partition(lam)


def _generate(n, largest):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _generate(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions_cached(d):
    return tuple(Partition(p) for p in _generate(d, d))


def partitions_of(d, maximum=None):
    """All partitions of ``d`` in reverse lexicographic order."""
    check_degree(d, maximum)
    return list(_partitions_cached(d))


def conjugate(lam):
    lam = _ensure(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def rank(lam):
    """Number of cells on the main diagonal of the Young diagram."""
    lam = _ensure(lam)
    return sum(1 for i, p in enumerate(lam, start=1) if p >= i)


def hooks(lam):
    """Hook lengths of all cells, listed row by row."""
    lam = _ensure(lam)
    cols = conjugate(lam)
    return [
        (lam[i] - j - 1) + (cols[j] - i - 1) + 1
        for i in range(len(lam))
        for j in range(lam[i])
    ]


def dim_rep(lam):
    """Dimension of the irreducible representation, by the hook length formula."""
    lam = _ensure(lam)
    hook_product = prod(hooks(lam))
    n = factorial(lam.size)
    if n % hook_product:
        raise ArithmeticError("hook product does not divide %d!" % lam.size)
    return n // hook_product


def content_sum(lam):
    """Sum of (column - row) over the cells of the Young diagram."""
    lam = _ensure(lam)
    return sum(j - i for i in range(len(lam)) for j in range(lam[i]))


def zeta(lam):
    """Order of the centralizer of a permutation of cycle type ``lam``."""
    lam = _ensure(lam)
    return prod(factorial(m) * k ** m for k, m in Counter(lam).items())


def class_size(lam):
    lam = _ensure(lam)
    return factorial(lam.size) // zeta(lam)


def sq(lam):
    """Cycle type of g**2 for g of cycle type ``lam``: even parts split in half."""
    lam = _ensure(lam)
    parts = []
    for p in lam:
        parts.extend((p // 2, p // 2) if p % 2 == 0 else (p,))
    return Partition.from_parts(parts)


def sign(lam):
    lam = _ensure(lam)
    return -1 if (lam.size - len(lam)) % 2 else 1


def is_self_conjugate(lam):
    lam = _ensure(lam)
    return conjugate(lam) == lam


def self_conjugate_partitions(d, maximum=None):
    return [p for p in partitions_of(d, maximum) if is_self_conjugate(p)]


def crosscap_sign(lam):
    """(-1)**((d - r)/2) for a self-conjugate partition; d - r is always even there."""
    lam = _ensure(lam)
    if not is_self_conjugate(lam):
        raise ArgumentError("%r is not self-conjugate" % (lam,))
    return -1 if ((lam.size - rank(lam)) // 2) % 2 else 1
