"""Hopf structure on the free commutative algebra generated by the loop
elementary symbols.

Elements live in EPoly, a SparsePoly over abstract generators E(k, r)
graded by deg E(k, r) = k with color r cyclic.  The coproduct acts on
generators by

    coproduct(E(i, r)) = sum_j E(j, r) (x) E(i-j, r+j),      E(0, .) = 1,

extended as an algebra map; the counit kills positive degree.  The
antipode sends E(i, r) to (-1)^i times the single-row Schur expansion
s_(i) at top color r+i-1, written in the generators by the Jacobi-Trudi
determinant; the sign is the one under which the antipode axiom
sum_j S(E(j, r)) * E(i-j, r+j) = 0 closes, as the degree-one case already
shows.  Everything here can be pushed to the concrete polynomial ring by
evaluating each generator at the corresponding loop elementary."""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .lsym import loop_e
from .matpoly import det_expand
from .ring import SparsePoly, canon_color


class EGen(NamedTuple):
    """Abstract loop elementary generator of degree k and color r."""

    k: int
    r: int

    def __str__(self):
        return "e[%d]^(%d)" % (self.k, self.r)


def egen(k, r, n):
    """The generator E(k, r) as an EPoly, color reduced mod n."""
    if k < 0:
        return SparsePoly.zero()
    if k == 0:
        return SparsePoly.one()
    return SparsePoly.variable(EGen(k, canon_color(r, n)))


def e_degree(p):
    """Top graded degree, counting deg E(k, r) = k."""
    best = 0
    for mono in p.terms:
        best = max(best, sum(g.k * e for g, e in mono))
    return best


def is_e_homogeneous(p, d):
    return all(sum(g.k * e for g, e in mono) == d for mono in p.terms)


class ETensor:
    """An element of EPoly (x) EPoly in expanded monomial form.

    terms maps (left monomial, right monomial) pairs to coefficients;
    multiplication is factorwise."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for key, c in (terms or {}).items():
            if c:
                clean[key] = clean.get(key, 0) + c
                if not clean[key]:
                    del clean[key]
        self.terms = clean

    @classmethod
    def one(cls):
        return cls({((), ()): Fraction(1)})

    @classmethod
    def from_pair(cls, left, right):
        left, right = _as_epoly(left), _as_epoly(right)
        terms = {}
        for ml, cl in left.terms.items():
            for mr, cr in right.terms.items():
                key = (ml, mr)
                terms[key] = terms.get(key, 0) + cl * cr
        return cls(terms)

    def __add__(self, other):
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return ETensor(out)

    def __sub__(self, other):
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) - c
        return ETensor(out)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ETensor({k: c * other for k, c in self.terms.items()})
        out = {}
        for (la, ra), ca in self.terms.items():
            for (lb, rb), cb in other.terms.items():
                key = (_mono_mul(la, lb), _mono_mul(ra, rb))
                out[key] = out.get(key, 0) + ca * cb
        return ETensor(out)

    __rmul__ = __mul__

    def flip(self):
        """Swap the two tensor factors."""
        return ETensor({(r, l): c for (l, r), c in self.terms.items()})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, ETensor) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for (l, r), c in sorted(self.terms.items()):
            lp = str(SparsePoly._raw({l: Fraction(1)}))
            rp = str(SparsePoly._raw({r: Fraction(1)}))
            coeff = "" if c == 1 else "%s*" % c
            bits.append("%s%s (x) %s" % (coeff, lp, rp))
        return " + ".join(bits)

    def __repr__(self):
        return "ETensor(%s)" % self


def _mono_mul(a, b):
    out = dict(a)
    for v, e in b:
        out[v] = out.get(v, 0) + e
    return tuple(sorted((v, e) for v, e in out.items() if e))


def _as_epoly(obj):
    if isinstance(obj, SparsePoly):
        return obj
    return SparsePoly.constant(Fraction(obj))


def _gen_coproduct(g, n):
    out = {}
    for j in range(g.k + 1):
        left = () if j == 0 else ((EGen(j, g.r), 1),)
        rest = g.k - j
        right = () if rest == 0 else ((EGen(rest, canon_color(g.r + j, n)), 1),)
        out[(left, right)] = out.get((left, right), 0) + Fraction(1)
    return ETensor(out)


def coproduct(p, n):
    """Extend the generator coproduct to EPoly as an algebra map."""
    p = _as_epoly(p)
    total = ETensor({})
    for mono, coeff in p.terms.items():
        t = ETensor.one() * coeff
        for g, e in mono:
            dg = _gen_coproduct(g, n)
            for _ in range(e):
                t = t * dg
        total = total + t
    return total


def counit(p):
    """Constant coefficient; kills every positive-degree generator."""
    return _as_epoly(p).terms.get((), Fraction(0))


def single_row_schur(i, r, n):
    """s_(i) at top color r as an EPoly Jacobi-Trudi determinant."""
    if i < 0:
        return SparsePoly.zero()
    if i == 0:
        return SparsePoly.one()
    mat = [[egen(1 - a + b, r - b + 1, n) for b in range(1, i + 1)] for a in range(1, i + 1)]
    out = det_expand(mat)
    return _as_epoly(out)


def antipode(p, n, signed=True):
    """Antipode on EPoly: E(i, r) -> (-1)^i s_(i) at top color r+i-1.

    With signed off the (-1)^i is dropped, which breaks the antipode
    axiom already in degree one; the flag exists so the check below can
    demonstrate that."""
    p = _as_epoly(p)
    bindings = {}
    for mono in p.terms:
        for g, _ in mono:
            if g not in bindings:
                image = single_row_schur(g.k, canon_color(g.r + g.k - 1, n), n)
                if signed and g.k % 2:
                    image = -image
                bindings[g] = image
    return p.subs_poly(bindings)


def antipode_axiom_check(i, k, n, signed=True):
    """True iff sum_j S(E(j, k)) * E(i-j, k+j) vanishes."""
    total = SparsePoly.zero()
    for j in range(i + 1):
        total = total + antipode(egen(j, k, n), n, signed) * egen(i - j, k + j, n)
    return total.is_zero()


def coassociativity_check(i, k, n):
    """(coproduct (x) id) vs (id (x) coproduct) on the generator E(i, k)."""
    t = coproduct(egen(i, k, n), n)
    left = {}
    right = {}
    for (ml, mr), c in t.terms.items():
        for (a, b), cc in coproduct(SparsePoly._raw({ml: Fraction(1)}), n).terms.items():
            key = (a, b, mr)
            left[key] = left.get(key, 0) + c * cc
        for (b, cmono), cc in coproduct(SparsePoly._raw({mr: Fraction(1)}), n).terms.items():
            key = (ml, b, cmono)
            right[key] = right.get(key, 0) + c * cc
    left = {k2: v for k2, v in left.items() if v}
    right = {k2: v for k2, v in right.items() if v}
    return left == right


def counit_check(i, k, n):
    """(counit (x) id) after the coproduct returns E(i, k) itself."""
    t = coproduct(egen(i, k, n), n)
    out = SparsePoly.zero()
    for (ml, mr), c in t.terms.items():
        if ml == ():
            out = out + SparsePoly._raw({mr: Fraction(c)})
    return out == egen(i, k, n)


def eval_epoly(p, n, m, vars=None):
    """Push an EPoly to the concrete ring, E(k, r) -> loop e_k^{(r)}."""
    p = _as_epoly(p)
    bindings = {}
    for mono in p.terms:
        for g, _ in mono:
            if g not in bindings:
                bindings[g] = loop_e(n, m, g.k, g.r, vars)
    return p.subs_poly(bindings)
