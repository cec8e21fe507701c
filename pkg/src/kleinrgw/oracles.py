"""
Independent brute-force computations used to validate the closed formulas.

Nothing here reads the structure constants of :mod:`kleinrgw.tqft`.  The
character oracle uses the Frobenius formula instead of Murnaghan-Nakayama,
the class-algebra oracle multiplies permutations, and the level-0 cap
coefficients are read off an explicit expansion in power-sum variables.
"""
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import factorial

from .characters import character_table
from .combinatorics import (
    Partition, check_degree, conjugate, crosscap_sign, is_self_conjugate,
    partitions_of, rank, sign, sq, zeta,
)
from .errors import ArgumentError, BoundsError

ELEMENT_MODE_MAX = 7
CLASS_MODE_MAX = 12


def cycle_type(perm):
    """Cycle type of a permutation given as a tuple of images of 0..n-1."""
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        n, j = 0, start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            n += 1
        lengths.append(n)
    return Partition.from_parts(lengths)


def _compose(p, q):
    """(p q)(i) = p(q(i))."""
    return tuple(p[i] for i in q)


def _inverse(p):
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


# characters by the Frobenius formula


def _power_sum_product(parts, n):
    """p_parts in n variables as {exponent tuple: coefficient}."""
    poly = {(0,) * n: 1}
    for k in parts:
        nxt = Counter()
        for mono, c in poly.items():
            for i in range(n):
                m = list(mono)
                m[i] += k
                nxt[tuple(m)] += c
        poly = nxt
    return poly


def frobenius_character(rho, alpha):
    """chi_rho(alpha) = coefficient of x^(rho + delta) in a_delta p_alpha."""
    rho, alpha = Partition(rho), Partition(alpha)
    if rho.size != alpha.size:
        raise ArgumentError("size mismatch: |%r| != |%r|" % (rho, alpha))
    n = len(rho)
    delta = tuple(n - 1 - i for i in range(n))
    target = tuple(r + e for r, e in zip(rho, delta))
    p = _power_sum_product(alpha, n)
    total = 0
    for perm in permutations(range(n)):
        shift = tuple(target[i] - delta[perm[i]] for i in range(n))
        if min(shift) < 0:
            continue
        coeff = p.get(shift)
        if coeff:
            total += _perm_sign(perm) * coeff
    return total


def _perm_sign(perm):
    ct = cycle_type(perm)
    return sign(ct)


# class algebra


def class_algebra_constants(d):
    """c[alpha, beta][gamma] with C_alpha C_beta = sum_gamma c C_gamma, by multiplying permutations."""
    if d > 6:
        raise BoundsError("permutation enumeration is limited to d <= 6")
    elements = list(permutations(range(d)))
    types = {g: cycle_type(g) for g in elements}
    reps = {}
    for g in elements:
        reps.setdefault(types[g], g)
    out = {}
    for gamma, z in reps.items():
        for x in elements:
            y = _compose(_inverse(x), z)
            key = (types[x], types[y])
            out.setdefault(key, Counter())[gamma] += 1
    return out


# signed Frobenius-Schur indicator


def sfs_bruteforce(rho, mode="class"):
    """(1/d!) sum over g in S_d of sign(g) chi_rho(g^2).

    ``mode="class"`` sums over conjugacy classes with weight 1/zeta;
    ``mode="element"`` iterates over every permutation (d <= 7).
    """
    rho = Partition(rho)
    d = rho.size
    table = character_table(d)
    if mode == "class":
        check_degree(d, CLASS_MODE_MAX)
        return sum((Fraction(sign(a) * table(rho, sq(a)), zeta(a)) for a in partitions_of(d)), Fraction(0))
    if mode == "element":
        check_degree(d, ELEMENT_MODE_MAX)
        total = 0
        for g in permutations(range(d)):
            ct = cycle_type(g)
            total += sign(ct) * table(rho, cycle_type(_compose(g, g)))
        return Fraction(total, factorial(d))
    raise ArgumentError("mode must be 'class' or 'element', got %r" % (mode,))


def o_rho(rho):
    """sum over odd classes beta of chi_rho(sq beta)/zeta(beta)."""
    rho = Partition(rho)
    table = character_table(rho.size)
    return sum((Fraction(table(rho, sq(b)), zeta(b)) for b in partitions_of(rho.size) if sign(b) < 0),
               Fraction(0))


def expected_sfs(rho):
    """The predicted value: the crosscap sign on self-conjugate rho, zero otherwise."""
    return crosscap_sign(rho) if is_self_conjugate(rho) else 0


@dataclass
class SfsReport:
    d: int
    brute: dict = field(default_factory=dict)
    formula: dict = field(default_factory=dict)
    element: dict = field(default_factory=dict)
    ok: bool = True


def sfs_report(d, element=None):
    """Brute-force SFS against (-1)^((d-r)/2)[rho = rho'] for every rho of d."""
    if element is None:
        element = d <= ELEMENT_MODE_MAX
    report = SfsReport(d)
    for rho in partitions_of(d):
        report.brute[rho] = sfs_bruteforce(rho, "class")
        report.formula[rho] = expected_sfs(rho)
        if element:
            report.element[rho] = sfs_bruteforce(rho, "element")
    report.ok = all(report.brute[r] == report.formula[r] for r in report.brute) and \
        all(report.element[r] == report.brute[r] for r in report.element)
    return report


def sfs_identity_sides(alpha):
    """Both sides of sum_{sq beta = alpha} sign(beta) zeta(alpha)/zeta(beta) = sum_{rho=rho'} eps chi_rho(alpha)."""
    alpha = Partition(alpha)
    d = alpha.size
    lhs = sum((Fraction(sign(b) * zeta(alpha), zeta(b)) for b in partitions_of(d) if sq(b) == alpha),
              Fraction(0))
    table = character_table(d)
    rhs = sum(((-1) ** ((d - rank(r)) // 2) * table(r, alpha) for r in partitions_of(d) if conjugate(r) == r), 0)
    return lhs, Fraction(rhs)


def sfs_identity_check(alpha):
    lhs, rhs = sfs_identity_sides(alpha)
    return lhs == rhs


# level-0 cap coefficients


def _p_poly_mul(a, b, d):
    """Product of sparse polynomials in p-variables keyed by sorted part tuples, truncated at degree d."""
    out = {}
    for ma, ca in a.items():
        sa = sum(ma)
        for mb, cb in b.items():
            if sa + sum(mb) > d:
                continue
            key = tuple(sorted(ma + mb, reverse=True))
            out[key] = out.get(key, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def level0_exponential(d):
    """Coefficients r_alpha of exp(sum_{k odd} p_k/k - 1/2 sum_m p_m^2/m) for all alpha of d."""
    x = {}
    for k in range(1, d + 1, 2):
        x[(k,)] = Fraction(1, k)
    for m in range(1, d // 2 + 1):
        key = (m, m)
        x[key] = x.get(key, 0) - Fraction(1, 2 * m)
    total = {(): Fraction(1)}
    term = {(): Fraction(1)}
    for n in range(1, d + 1):
        term = {k: v / n for k, v in _p_poly_mul(term, x, d).items()}
        for k, v in term.items():
            total[k] = total.get(k, 0) + v
    return {Partition(k): v for k, v in total.items() if sum(k) == d and v}


def level0_fiber_sum(alpha):
    alpha = Partition(alpha)
    return sum((Fraction(sign(lam), zeta(lam)) for lam in partitions_of(alpha.size) if sq(lam) == alpha),
               Fraction(0))


@dataclass
class RAlphaReport:
    d: int
    exponential: dict
    fiber: dict
    mismatches: list
    parity_violations: list

    @property
    def ok(self):
        return not self.mismatches and not self.parity_violations


def r_alpha_crosscheck(d):
    """Compare the two routes to r_alpha and check r_alpha = 0 for an odd number of even parts."""
    check_degree(d, 10)
    exp_route = level0_exponential(d)
    fiber = {a: level0_fiber_sum(a) for a in partitions_of(d)}
    mismatches = [a for a in partitions_of(d) if exp_route.get(a, Fraction(0)) != fiber[a]]
    parity = [a for a in partitions_of(d) if sum(1 for p in a if p % 2 == 0) % 2 and fiber[a]]
    return RAlphaReport(d, exp_route, fiber, mismatches, parity)
