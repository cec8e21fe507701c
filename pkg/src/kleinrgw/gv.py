"""
Real and complex BPS states of local curves.

For genus g >= 1 every generating-function coefficient is an exact Laurent
polynomial in s = exp(u/2), so extraction is exact: the residual at each
degree is expanded in u only as far as its own s-degree requires, solved
lowest order first, and the solution is then confirmed by an exact
subtraction.  Genus 0 needs negative powers of sinh and works with
truncated u-series.
"""
from dataclasses import dataclass, field
from fractions import Fraction

from .combinatorics import hooks, rank, self_conjugate_partitions
from .errors import ArgumentError, ExtractionError, TruncationError
from .ring import (
    DEFAULT_U_ORDER, QSeries, SPoly, USeries, exp_q, hook_product, invert_u, log_q, sinh_factor,
    to_u_series,
)
from .tqft import closed_invariant, gw_cy_at_iu

REAL = "real"
COMPLEX = "complex"


def _exact(g):
    return g >= 1


def default_hmax(g, dmax):
    """Largest h that can carry a nonzero invariant up to degree dmax.

    The complex support at degree d reaches 1 + (g-1) d(d+1)/2 (the
    partition (d) has hook sum d(d+1)/2) and bounds the real support too.
    """
    bound = g + 2 * dmax
    if g >= 1:
        bound = max(bound, 1 + (g - 1) * dmax * (dmax + 1) // 2)
    return bound


def sinh_power(k, e, order=DEFAULT_U_ORDER):
    """(2 sinh(k u/2))^e: exact for e >= 0, a u-series known through u^order otherwise."""
    base = sinh_factor(k)
    if e >= 0:
        return base ** e
    return invert_u(base ** (-e), order)


def _scalar_value(x):
    """The t-free coefficient of a closed CY invariant."""
    if not x.is_t_free():
        raise ArgumentError("expected a t-free invariant, got %r" % (x,))
    return x.coefficient(0)


def _margin(g, dmax):
    return 0 if _exact(g) else 2 * dmax + 2


def real_partition_function(g, dmax, order=DEFAULT_U_ORDER):
    """1 + sum_d RGW_d(g|g-1) q^d."""
    work = order + _margin(g, dmax)
    return QSeries({d: _scalar_value(closed_invariant(g, g - 1, d, work)) for d in range(1, dmax + 1)},
                   dmax, 1)


def complex_partition_function(g, dmax, order=DEFAULT_U_ORDER):
    """1 + sum_d sum_rho (-1)^(d(g-1)) P_rho^(2g-2) q^d, the complex CY theory at u -> iu."""
    work = order + 2 * _margin(g, dmax)
    return QSeries({d: _scalar_value(gw_cy_at_iu(g, d, work)) for d in range(1, dmax + 1)}, dmax, 1)


@dataclass
class BpsTable:
    """Integer BPS states n_{d,h}(g) on one side, with the extraction report."""

    genus: int
    side: str
    dmax: int
    hmax: int
    entries: dict = field(default_factory=dict)
    values: dict = field(default_factory=dict)
    report: dict = field(default_factory=dict)

    def __getitem__(self, key):
        return self.entries.get(key, 0)

    def value(self, d, h):
        """Exact extracted value, including non-integers."""
        return self.values.get((d, h), Fraction(0))

    def support(self):
        out = {}
        for (d, h), n in self.values.items():
            if n:
                out.setdefault(d, []).append(h)
        return {d: sorted(hs) for d, hs in out.items()}


def _basis_exponent(side, h):
    return h - 1 if side == REAL else 2 * h - 2


def _basis_sign(side, h):
    return 1 if side == REAL or h % 2 == 1 else -1


def _covers(side, d):
    """Multiple-cover factors k > 1 contributing to degree d."""
    return [k for k in range(2, d + 1) if d % k == 0 and (side == COMPLEX or k % 2 == 1)]


def _h_range(side, hmin, hmax):
    return range(hmin, hmax + 1)


def _basis_element(side, k, h, order):
    return sinh_power(k, _basis_exponent(side, h), order) * _basis_sign(side, h)


def _check_triangular(side, h, order):
    e = _basis_exponent(side, h)
    lead = to_u_series(sinh_factor(1), order + 2).inverse() if e < 0 else None
    series = to_u_series(sinh_power(1, e, order), max(e, 0) + 1) if e >= 0 else lead ** (-e)
    if series.valuation != e or series.coefficient(e) != 1:
        raise ExtractionError("basis element for h=%d does not start at u^%d with coefficient 1" % (h, e))


def _solve_exact(residual, side, hmin, d):
    """Solve residual = sum_h n_h sign_h (s - 1/s)^e(h) exactly, lowest u-order first."""
    if residual.is_zero():
        return {}
    top = max(abs(residual.degree()), abs(residual.low_degree()))
    series = to_u_series(residual, top)
    f = sinh_factor(1)
    found = {}
    h = hmin
    while _basis_exponent(side, h) <= top:
        e = _basis_exponent(side, h)
        c = series.coefficient(e)
        if c:
            n = c * _basis_sign(side, h)
            found[h] = n
            series = series - to_u_series(f ** e, top) * (n * _basis_sign(side, h))
        h += 1
    leftover = residual
    for h, n in found.items():
        leftover = leftover - f ** _basis_exponent(side, h) * (n * _basis_sign(side, h))
    if not leftover.is_zero():
        raise ExtractionError("degree %d residual is not in the span of the %s basis" % (d, side), leftover)
    return found


def _solve_series(residual, side, hmin, hmax, d):
    """Lowest-order-first solve on a truncated u-series residual."""
    order = residual.order
    need = _basis_exponent(side, hmax) + 3
    if order < need:
        raise TruncationError("u-order %d cannot separate h <= %d on the %s side (need %d)"
                              % (order, hmax, side, need))
    if not residual.is_zero() and residual.valuation < _basis_exponent(side, hmin):
        raise ExtractionError("degree %d residual starts below the lowest basis element" % d, residual)
    found = {}
    for h in _h_range(side, hmin, hmax):
        e = _basis_exponent(side, h)
        c = residual.coefficient(e)
        if c:
            n = c * _basis_sign(side, h)
            found[h] = n
            residual = residual - sinh_power(1, e, order + 2) * (n * _basis_sign(side, h))
    if not residual.is_zero():
        v = residual.valuation
        beyond = v > _basis_exponent(side, hmax)
        if beyond and (side == REAL or v % 2 == 0):
            raise TruncationError("degree %d support reaches beyond hmax=%d" % (d, hmax))
        raise ExtractionError("degree %d residual is not in the span of the %s basis" % (d, side), residual)
    return found


def _extract(series, g, side, hmax, order):
    if series.constant != 0:
        raise ArgumentError("extraction expects a connected series (zero constant term)")
    dmax = series.dmax
    hmax = default_hmax(g, dmax) if hmax is None else hmax
    hmin = 0
    for h in range(hmin, min(hmax, 2) + 1):
        _check_triangular(side, h, order)
    values = {}
    for d in range(1, dmax + 1):
        residual = series[d]
        for k in _covers(side, d):
            for (dd, h), n in list(values.items()):
                if dd * k == d and n:
                    residual = residual - _basis_element(side, k, h, order + 2 * h + 4) * (n / k)
        if isinstance(residual, (int, Fraction)):
            residual = SPoly.const(residual) if _exact(g) else USeries.const(residual, order)
        if isinstance(residual, SPoly):
            found = _solve_exact(residual, side, hmin, d)
            over = [h for h in found if h > hmax]
            if over:
                raise TruncationError("degree %d support reaches h=%d beyond hmax=%d" % (d, max(over), hmax))
        else:
            found = _solve_series(residual, side, hmin, hmax, d)
        for h, n in found.items():
            values[(d, h)] = n
    table = BpsTable(g, side, dmax, hmax)
    table.values = {k: v for k, v in sorted(values.items()) if v}
    table.entries = {k: int(v) for k, v in table.values.items() if v.denominator == 1}
    failures = [k for k, v in table.values.items() if v.denominator != 1]
    table.report = {
        "integrality_failures": [{"d": d, "h": h, "value": table.values[(d, h)]} for d, h in failures],
        "max_h": {d: max(hs) for d, hs in table.support().items()},
    }
    return table


def extract_complex_bps(g, dmax, hmax=None, order=None):
    """Complex BPS states from the log of the complex partition function."""
    hmax = default_hmax(g, dmax) if hmax is None else hmax
    order = _required_order(g, COMPLEX, hmax, order)
    z = complex_partition_function(g, dmax, order)
    return _extract(log_q(z), g, COMPLEX, hmax, order)


def _required_order(g, side, hmax, order):
    if _exact(g):
        return DEFAULT_U_ORDER if order is None else order
    need = _basis_exponent(side, hmax) + 3
    if order is None:
        return max(DEFAULT_U_ORDER, need)
    return order


def doublet_series(complex_table, dmax, order=DEFAULT_U_ORDER):
    """D = 1/2 sum n^C_{d,h} (-1)^(h-1) sum_k (1/k)(2 sinh(ku/2))^(2h-2) q^(2kd)."""
    out = {}
    for (d, h), n in complex_table.values.items():
        k = 1
        while 2 * k * d <= dmax:
            term = _basis_element(COMPLEX, k, h, order) * (n / (2 * k))
            key = 2 * k * d
            out[key] = out[key] + term if key in out else term
            k += 1
    return QSeries(out, dmax)


def connected_real_series(g, dmax, order=DEFAULT_U_ORDER, complex_table=None):
    """C_g = log(1 + sum_d RGW_d(g|g-1) q^d) - D_g."""
    if g < 0:
        raise ArgumentError("genus must be non-negative")
    work = order + _margin(g, dmax)
    if complex_table is None:
        complex_table = extract_complex_bps(g, dmax // 2 or 1, order=_required_order(
            g, COMPLEX, default_hmax(g, dmax // 2 or 1), None if _exact(g) else work))
    z = real_partition_function(g, dmax, work)
    c = log_q(z) - doublet_series(complex_table, dmax, work)
    if _exact(g):
        return c
    out = {}
    for d, x in c.coeffs.items():
        x = x if isinstance(x, USeries) else to_u_series(x, work)
        if x.order < order:
            raise TruncationError("degree %d coefficient known only to u^%d, need u^%d" % (d, x.order, order))
        out[d] = x.truncate(order)
    return QSeries(out, dmax)


def extract_real_bps(series, g, hmax=None):
    """Real BPS states from a connected real series (odd multiple covers only)."""
    order = None
    for x in series.coeffs.values():
        if isinstance(x, USeries):
            order = x.order if order is None else min(order, x.order)
    return _extract(series, g, REAL, hmax, DEFAULT_U_ORDER if order is None else order)


def resynthesize(table, dmax=None, order=DEFAULT_U_ORDER):
    """Rebuild the connected series from a BPS table via the GV form."""
    dmax = table.dmax if dmax is None else dmax
    side = table.side
    out = {}
    for (d, h), n in table.values.items():
        k = 1
        while k * d <= dmax:
            if side == COMPLEX or k % 2 == 1:
                term = _basis_element(side, k, h, order) * (n / k)
                out[k * d] = out[k * d] + term if k * d in out else term
            k += 1
    return QSeries(out, dmax)


@dataclass
class GvReport:
    genus: int
    dmax: int
    real: BpsTable
    complex: BpsTable
    checks: dict
    failures: dict

    @property
    def ok(self):
        return all(self.checks.values())


def closed_form_table(g, dmax):
    """The known closed-form tables for g = 0 and g = 1, else None."""
    if g == 0:
        return {(1, 0): 1}, {(1, 0): 1}
    if g == 1:
        return ({(d, 1): (-1) ** (d - 1) for d in range(1, dmax + 1)},
                {(d, 1): 1 for d in range(1, dmax + 1)})
    return None


def gv_verify(g, dmax, hmax=None, order=None):
    """Extract both tables and check integrality, parity, vanishing, support and re-synthesis."""
    hmax = default_hmax(g, dmax) if hmax is None else hmax
    order = _required_order(g, REAL, hmax, order)
    complex_table = extract_complex_bps(g, dmax, hmax, _required_order(g, COMPLEX, hmax, None if _exact(g) else order + 2 * dmax + 2))
    series = connected_real_series(g, dmax, order, complex_table)
    real = extract_real_bps(series, g, hmax)
    failures = {
        "integrality": [k for k, v in list(real.values.items()) + list(complex_table.values.items())
                        if v.denominator != 1],
        "parity": [],
        "vanishing": [],
        "support": [],
        "degree one": [],
        "closed form": [],
    }
    keys = set(real.values) | set(complex_table.values)
    for key in sorted(keys):
        nr, nc = real.value(*key), complex_table.value(*key)
        if nr.denominator == 1 and nc.denominator == 1 and (nr - nc) % 2:
            failures["parity"].append(key)
    for (d, h), n in real.values.items():
        if n and (d * (g - 1) + h - 1) % 2:
            failures["vanishing"].append((d, h))
        if n and h < g:
            failures["support"].append((d, h))
    for h in range(0, hmax + 1):
        if real.value(1, h) != (1 if h == g else 0):
            failures["degree one"].append((1, h))
    closed = closed_form_table(g, dmax)
    if closed is not None:
        r, c = closed
        if real.values != {k: Fraction(v) for k, v in r.items()}:
            failures["closed form"].append(REAL)
        if complex_table.values != {k: Fraction(v) for k, v in c.items()}:
            failures["closed form"].append(COMPLEX)
    rebuilt = resynthesize(real, dmax, series_order(series))
    resynthesis = _series_agree(rebuilt, series)
    checks = {name: not items for name, items in failures.items()}
    checks["resynthesis"] = resynthesis
    return GvReport(g, dmax, real, complex_table, checks, failures)


def series_order(series):
    orders = [x.order for x in series.coeffs.values() if isinstance(x, USeries)]
    return min(orders) if orders else DEFAULT_U_ORDER


def _series_agree(a, b):
    for d in range(1, min(a.dmax, b.dmax) + 1):
        x, y = a[d], b[d]
        if isinstance(x, USeries) or isinstance(y, USeries):
            if isinstance(x, USeries):
                if not x.agrees(y):
                    return False
            elif not y.agrees(x):
                return False
        elif x != y:
            return False
    return True


def parity_polynomials(smax=12):
    """f(Q)^s and F(Q)^s for f = Q - 1/Q and F = 2 - Q - 1/Q, as Laurent polynomials in Q."""
    f = SPoly({1: 1, -1: -1})
    big_f = SPoly({0: 2, 1: -1, -1: -1})
    return [(s, f ** s, big_f ** s) for s in range(smax + 1)]


def parity_check(smax=12):
    """Coefficientwise f^s = F^s mod 2, with leading coefficients +-1."""
    for s, a, b in parity_polynomials(smax):
        exps = set(a.coefficients()) | set(b.coefficients())
        if any((a.coefficient(e) - b.coefficient(e)) % 2 for e in exps):
            return False
        if abs(a.coefficient(s)) != 1 or abs(b.coefficient(s)) != 1:
            return False
    return True


# closed generating functions


@dataclass
class IdentityReport:
    """Named pass/fail checks for one generating-function identity, plus the series compared."""

    name: str
    checks: dict
    series: dict

    @property
    def ok(self):
        return all(self.checks.values())


def sphere_hook_series(dmax, order=DEFAULT_U_ORDER):
    """1 + sum over self-conjugate rho of (-1)^((d-r)/2) prod_hooks (2 sinh(hu/2))^-1 q^d."""
    out = {}
    for d in range(1, dmax + 1):
        terms = [invert_u(hook_product(hooks(rho)), order) * (-1) ** ((d - rank(rho)) // 2)
                 for rho in self_conjugate_partitions(d)]
        if terms:
            out[d] = _sum_series(terms)
    return QSeries(out, dmax, 1)


def sphere_exp_series(dmax, order=DEFAULT_U_ORDER):
    """exp(sum_{k odd} (1/k)(2 sinh(ku/2))^-1 q^k - 1/2 sum_k (1/k)(2 sinh(ku/2))^-2 q^2k)."""
    f = {}
    for k in range(1, dmax + 1, 2):
        f[k] = sinh_power(k, -1, order) * Fraction(1, k)
    for k in range(1, dmax // 2 + 1):
        term = sinh_power(k, -2, order) * Fraction(-1, 2 * k)
        f[2 * k] = f[2 * k] + term if 2 * k in f else term
    return exp_q(QSeries(f, dmax))


def sphere_connected_series(dmax, order=DEFAULT_U_ORDER):
    """sum_{k odd} (1/k)(2 sinh(ku/2))^-1 q^k."""
    return QSeries({k: sinh_power(k, -1, order) * Fraction(1, k) for k in range(1, dmax + 1, 2)}, dmax)


def _sum_series(terms):
    total = terms[0]
    for x in terms[1:]:
        total = total + x
    return total


def sphere_cy_report(dmax=8, order=20):
    """Genus-0 level -1 identity: hook sum, closed invariants, exp form and connected part agree to u^order."""
    work = order + 2 * dmax + 2
    hook = sphere_hook_series(dmax, work)
    closed = real_partition_function(0, dmax, order)
    expo = sphere_exp_series(dmax, work)
    connected = connected_real_series(0, dmax, order)
    expected = sphere_connected_series(dmax, order)
    checks = {
        "closed invariants = hook sum": closed.agrees(hook, order),
        "hook sum = exp form": hook.agrees(expo, order),
        "connected part": connected.agrees(expected, order),
    }
    series = {"hook": hook, "closed": closed, "exp": expo, "connected": connected}
    return IdentityReport("sphere-cy", checks, series)


def _int_series_mul(a, b, dmax):
    out = [0] * (dmax + 1)
    for i, x in enumerate(a):
        if x:
            for j in range(dmax + 1 - i):
                out[i + j] += x * b[j]
    return out


def torus_product(dmax):
    """Coefficients of prod_{d>=1} 1/(1 + (-q)^d) through q^dmax."""
    out = [1] + [0] * dmax
    for d in range(1, dmax + 1):
        # 1/(1 + x) with x = (-q)^d
        factor = [0] * (dmax + 1)
        for m in range(0, dmax // d + 1):
            factor[m * d] = (-1) ** m * (-1) ** (m * d)
        out = _int_series_mul(out, factor, dmax)
    return out


def torus_report(dmax=10):
    """Genus-1 level 0 series against the self-conjugate count, the product and the exp form."""
    values = {}
    for d in range(1, dmax + 1):
        x = _scalar_value(closed_invariant(1, 0, d))
        if not (isinstance(x, SPoly) and x.is_constant()):
            raise ArgumentError("torus invariant at d=%d is not a constant: %r" % (d, x))
        values[d] = x.coefficient(0)
    closed = QSeries(values, dmax, 1)
    product = torus_product(dmax)
    counts = {d: len(self_conjugate_partitions(d)) for d in range(1, dmax + 1)}
    f = {}
    for d in range(1, dmax + 1):
        for k in range(1, dmax // d + 1):
            if k % 2:
                f[d * k] = f.get(d * k, 0) + Fraction((-1) ** (d - 1), k)
            if 2 * d * k <= dmax:
                f[2 * d * k] = f.get(2 * d * k, 0) + Fraction(1, 2 * k)
    expo = exp_q(QSeries(f, dmax))
    connected = {n: sum(Fraction((-1) ** (d - 1), n // d) for d in range(1, n + 1)
                        if n % d == 0 and (n // d) % 2) for n in range(1, dmax + 1)}
    doublet = {n: sum(Fraction(1, 2 * k) for k in range(1, n // 2 + 1) if n % (2 * k) == 0)
               for n in range(2, dmax + 1, 2)}
    checks = {
        "self-conjugate count": all(values[d] == counts[d] for d in counts),
        "product form": all(values[d] == product[d] for d in counts),
        "exp form": closed == expo,
        "connected part": log_q(closed) - QSeries(doublet, dmax) == QSeries(connected, dmax),
    }
    series = {"closed": closed, "product": QSeries(dict(enumerate(product[1:], 1)), dmax, 1),
              "exp": expo}
    return IdentityReport("torus", checks, series)
