"""Loop elementary, Schur, and powersum symmetric polynomials.

Three independent routes generate the loop e's: the explicit subset-sum
formula, the whirl matrix product read off by extract_e, and the cylindric
highway path model (boundary_measurement).  Loop Schur functions come both
as tableau sums and as Jacobi-Trudi determinants in the e's."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .matpoly import MatrixPoly, det_expand, extract_e
from .ring import SparsePoly, canon_color, var
from .shapes import add_ribbons, asshape, aspartition, content, ssyt_enumerate


class LoopVarArray:
    """m sites of n cyclically colored values, symbolic or numeric."""

    __slots__ = ("n", "m", "values")

    def __init__(self, n, m, values=None):
        if n < 1 or m < 0:
            raise ValueError("need n >= 1 and m >= 0")
        self.n = n
        self.m = m
        if values is not None:
            values = tuple(tuple(row) for row in values)
            if len(values) != m or any(len(row) != n for row in values):
                raise ValueError("values must be m rows of n entries")
        self.values = values

    @classmethod
    def symbolic(cls, n, m):
        return cls(n, m)

    @classmethod
    def numeric(cls, n, m, values):
        return cls(n, m, values)

    def is_symbolic(self):
        return self.values is None

    def value(self, site, color):
        c = canon_color(color, self.n)
        if self.values is None:
            return SparsePoly.variable(var(site, c, self.n))
        return self.values[site - 1][c - 1]

    def column(self, site):
        return [self.value(site, j) for j in range(1, self.n + 1)]

    def one(self):
        return SparsePoly.one() if self.values is None else 1

    def zero(self):
        return SparsePoly.zero() if self.values is None else 0

    def __repr__(self):
        if self.values is None:
            return "LoopVarArray.symbolic(%d, %d)" % (self.n, self.m)
        return "LoopVarArray.numeric(%d, %d, %r)" % (self.n, self.m, self.values)


def _vars_for(n, m, vars):
    if vars is None:
        return LoopVarArray(n, m)
    if vars.n != n or vars.m != m:
        raise ValueError("variable array has wrong dimensions")
    return vars


def loop_e(n, m, k, r, vars=None):
    """Loop elementary e_k^{(r)}: sum over sites i1<...<ik of
    x_{i1}^{(r)} x_{i2}^{(r+1)} ... x_{ik}^{(r+k-1)}."""
    vars = _vars_for(n, m, vars)
    if k == 0:
        return vars.one()
    if k < 0 or k > m:
        return vars.zero()
    total = vars.zero()
    for sites in combinations(range(1, m + 1), k):
        term = vars.one()
        for step, site in enumerate(sites):
            term = term * vars.value(site, r + step)
        total = total + term
    return total


def whirl(n, params):
    """The n x n whirl matrix: identity diagonal, params on the
    superdiagonal, params[n-1] * t in the corner (n, 1)."""
    params = list(params)
    if len(params) != n:
        raise ValueError("need exactly n parameters")
    if n == 1:
        return MatrixPoly(1, [[(1, params[0])]])
    rows = [[() for _ in range(n)] for _ in range(n)]
    for i in range(n):
        rows[i][i] = (1,)
    for i in range(n - 1):
        rows[i][i + 1] = (params[i],)
    rows[n - 1][0] = (0, params[n - 1])
    return MatrixPoly(n, rows)


def whirl_product(vars):
    """Product of the whirl matrices of the m site columns."""
    P = MatrixPoly.identity(vars.n)
    for site in range(1, vars.m + 1):
        P = P * whirl(vars.n, vars.column(site))
    return P


def tableau_loop_weight(n, tab, r, vars=None, m=None):
    """The r-weight of one tableau: prod over cells s of x_{T(s)}^{(c(s)+r)}."""
    if vars is not None:
        m = vars.m
    elif m is None:
        m = max(tab.max_entry(), 1)
    vars = _vars_for(n, m, vars)
    term = vars.one()
    for cell, entry in sorted(tab.entries.items()):
        term = term * vars.value(entry, content(cell) + r)
    return term


def loop_schur_tableaux(n, shape, r, m, vars=None):
    """Loop Schur s^{(r)} as the sum of r-weights over SSYT with entries <= m."""
    shape = asshape(shape)
    vars = _vars_for(n, m, vars)
    total = vars.zero()
    for tab in ssyt_enumerate(shape, m):
        total = total + tableau_loop_weight(n, tab, r, vars)
    return total


def loop_schur_jt(n, shape, r, m, vars=None):
    """Loop Schur via the Jacobi-Trudi determinant in the loop e's.

    For the shape rho/nu this is det(e_{lam_i - mu_j - i + j}^{(r - j + 1 + mu_j)})
    with lam = rho', mu = nu', and size equal to the number of columns of rho."""
    shape = asshape(shape)
    vars = _vars_for(n, m, vars)
    lam = shape.outer.conjugate()
    mu = shape.inner.conjugate()
    size = shape.outer.part(1)
    if size == 0:
        return vars.one()
    cache = {}

    def entry(k, color):
        key = (k, canon_color(color, n))
        if key not in cache:
            cache[key] = loop_e(n, m, key[0], key[1], vars)
        return cache[key]

    mat = [
        [
            entry(lam.part(i) - mu.part(j) - i + j, r - j + 1 + mu.part(j))
            for j in range(1, size + 1)
        ]
        for i in range(1, size + 1)
    ]
    out = det_expand(mat)
    if vars.is_symbolic() and not isinstance(out, SparsePoly):
        out = SparsePoly.constant(out)
    return out


def loop_powersum(n, m, k, vars=None):
    """p~_k = sum over sites of (x_i^{(1)} ... x_i^{(n)})^k."""
    if k < 1:
        raise ValueError("powersum index must be positive")
    vars = _vars_for(n, m, vars)
    total = vars.zero()
    for site in range(1, m + 1):
        cycle = vars.one()
        for color in range(1, n + 1):
            cycle = cycle * vars.value(site, color)
        total = total + cycle ** k
    return total


def mn_expand(n, k, lam, r=1, m=None):
    """Ribbon list [(mu, sign)] with p~_k * s_lam^{(r)} = sum sign * s_mu^{(r)}.

    The list depends only on n, k, lam; r and m just name the ambient ring
    in which the identity holds."""
    if k < 1:
        raise ValueError("powersum index must be positive")
    lam = aspartition(lam)
    return [(mu, (-1) ** height) for mu, height in add_ribbons(lam, k * n)]


def boundary_measurement(vars, from_wire, to_wire, wraps):
    """Weight generating function of highway paths between boundary wires
    with a fixed winding number around the cylinder.

    Computed by the path model directly: at each site column the path either
    stays on its wire (weight 1) or steps to the next wire cyclically
    (weight x_site^{(wire)}); a path of k steps from wire r winds
    ceil-style, so k = wraps * n - ((from - to) mod n)."""
    n = vars.n
    if not (1 <= from_wire <= n and 1 <= to_wire <= n):
        raise ValueError("wires must be in 1..n")
    if wraps < 0:
        raise ValueError("wraps must be nonnegative")
    k = wraps * n - ((from_wire - to_wire) % n)
    if k < 0:
        return vars.zero()
    if k == 0:
        return vars.one()
    steps = [vars.one()] + [vars.zero()] * k
    for site in range(1, vars.m + 1):
        for s in range(min(site, k), 0, -1):
            steps[s] = steps[s] + steps[s - 1] * vars.value(site, from_wire + s - 1)
    return steps[k]


def cycle_measurement(vars, wraps):
    """Underway cycle measurements: equals loop_powersum(wraps)."""
    return loop_powersum(vars.n, vars.m, wraps, vars)
