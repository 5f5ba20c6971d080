"""Exact arithmetic kernel: named variables, sparse multivariate polynomials
over big rationals, and rational expressions.

Everything downstream is generic over this kernel.  All values are treated as
immutable after construction and all operations are pure, so instances are
safe to share.  Equality of rational expressions uses cross-multiplication;
no multivariate gcd is ever computed (only the integer content of the
denominator is normalized out).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple


class DenominatorVanishes(ZeroDivisionError):
    """A denominator is zero: identically, or at the evaluation point."""


class VarId(NamedTuple):
    """The variable x_i^(j): site i, color j stored as a residue in 1..n."""

    site: int
    color: int

    def __str__(self):
        return "x[%d]^(%d)" % (self.site, self.color)


def canon_color(raw, n):
    # colors live on Z/n shifted into 1..n, so raw 0 and raw n coincide
    return (raw - 1) % n + 1


def var(site, color, n):
    """VarId with the color reduced to its canonical residue mod n."""
    return VarId(site, canon_color(color, n))


# A monomial is a tuple of (variable, exponent) pairs, sorted by variable,
# exponents all positive.  () is the constant monomial.


def _mono_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def _mono_key(mono):
    # canonical order: total degree, then lexicographic on the exponent vector
    return (sum(e for _, e in mono), mono)


def _mono_str(mono):
    return "*".join(
        str(v) if e == 1 else "%s^%d" % (v, e) for v, e in mono
    )


class SparsePoly:
    """Multivariate polynomial stored as {monomial: nonzero Fraction}.

    Treat instances as immutable.  Variables can be any hashable, mutually
    orderable keys; the library itself always uses VarId.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff:
                    clean[tuple(sorted(mono))] = coeff
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        # internal: terms already canonical
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def one(cls):
        return cls.constant(1)

    @classmethod
    def constant(cls, c):
        c = Fraction(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def variable(cls, v):
        return cls._raw({((v, 1),): Fraction(1)})

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or set(self.terms) == {()}

    def constant_value(self):
        return self.terms.get((), Fraction(0))

    def coeff(self, mono):
        return self.terms.get(tuple(sorted(mono)), Fraction(0))

    def variables(self):
        seen = set()
        for mono in self.terms:
            for v, _ in mono:
                seen.add(v)
        return seen

    def total_degree(self):
        # degree of the zero polynomial reported as -1
        return max((sum(e for _, e in m) for m in self.terms), default=-1)

    def degree_in(self, v):
        best = 0
        for mono in self.terms:
            for w, e in mono:
                if w == v and e > best:
                    best = e
        return best

    def is_homogeneous(self):
        return len({sum(e for _, e in m) for m in self.terms}) <= 1

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SparsePoly.constant(other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other):
        other = as_poly(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return SparsePoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-as_poly(other))

    def __rsub__(self, other):
        return as_poly(other) + (-self)

    def __mul__(self, other):
        other = as_poly(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return SparsePoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out = SparsePoly.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return SparsePoly.zero()
        return SparsePoly._raw({m: k * c for m, k in self.terms.items()})

    def eval_at(self, point):
        total = Fraction(0)
        for mono, c in self.terms.items():
            val = c
            for v, e in mono:
                val *= Fraction(point[v]) ** e
            total += val
        return total

    def partial(self, v):
        out = {}
        for mono, c in self.terms.items():
            d = dict(mono)
            e = d.pop(v, 0)
            if not e:
                continue
            if e > 1:
                d[v] = e - 1
            out[tuple(sorted(d.items()))] = c * e
        return SparsePoly._raw(out)

    def subs_poly(self, bindings):
        """Substitute variables by polynomials or scalars; unbound stay fixed."""
        out = SparsePoly.zero()
        for mono, c in self.terms.items():
            term = SparsePoly.constant(c)
            for v, e in mono:
                rep = bindings.get(v)
                rep = SparsePoly.variable(v) if rep is None else as_poly(rep)
                term = term * rep ** e
            out = out + term
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for mono in sorted(self.terms, key=_mono_key):
            c = self.terms[mono]
            body = _mono_str(mono)
            if not body:
                piece = str(abs(c))
            elif abs(c) == 1:
                piece = body
            else:
                piece = "%s*%s" % (abs(c), body)
            if not bits:
                bits.append(piece if c > 0 else "-" + piece)
            else:
                bits.append(("+ " if c > 0 else "- ") + piece)
        return " ".join(bits)

    def __repr__(self):
        return "SparsePoly(%s)" % self


def as_poly(obj):
    if isinstance(obj, SparsePoly):
        return obj
    if isinstance(obj, RationalExpr):
        raise TypeError("rational expression where a polynomial is required")
    if isinstance(obj, VarId):
        return SparsePoly.variable(obj)
    return SparsePoly.constant(obj)


def poly_arith(a, b, op):
    """Exact add/sub/mul on polynomials."""
    a, b = as_poly(a), as_poly(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError("unknown op %r" % (op,))


def partial_derivative(p, v):
    """Formal partial derivative of a polynomial."""
    return as_poly(p).partial(v)


def _content(p):
    # positive gcd of the Fraction coefficients
    g = 0
    l = 1
    for c in p.terms.values():
        g = math.gcd(g, abs(c.numerator))
        l = l * c.denominator // math.gcd(l, c.denominator)
    return Fraction(g, l)


def _manifestly_positive(p):
    return bool(p.terms) and all(c > 0 for c in p.terms.values())


class RationalExpr:
    """num/den with den not identically zero.

    The denominator is normalized by its integer content, signed so the
    leading coefficient is positive.  subtraction_free is True only for
    expressions manifestly buildable without subtraction; such expressions
    are strictly positive at every all-positive point.
    """

    __slots__ = ("num", "den", "subtraction_free")

    def __init__(self, num, den=1, subtraction_free=None):
        num = as_poly(num)
        den = as_poly(den)
        if den.is_zero():
            raise DenominatorVanishes("denominator is identically zero")
        lead = den.terms[max(den.terms, key=_mono_key)]
        c = _content(den)
        if lead < 0:
            c = -c
        if c != 1:
            num = num.scale(1 / c)
            den = den.scale(1 / c)
        self.num = num
        self.den = den
        if subtraction_free is None:
            subtraction_free = _manifestly_positive(num) and _manifestly_positive(den)
        self.subtraction_free = bool(subtraction_free)

    def __add__(self, other):
        other = as_ratexpr(other)
        return RationalExpr(
            self.num * other.den + other.num * self.den,
            self.den * other.den,
            self.subtraction_free and other.subtraction_free,
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalExpr(-self.num, self.den, False)

    def __sub__(self, other):
        other = as_ratexpr(other)
        return RationalExpr(
            self.num * other.den - other.num * self.den,
            self.den * other.den,
            False,
        )

    def __rsub__(self, other):
        return as_ratexpr(other) - self

    def __mul__(self, other):
        other = as_ratexpr(other)
        return RationalExpr(
            self.num * other.num,
            self.den * other.den,
            self.subtraction_free and other.subtraction_free,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = as_ratexpr(other)
        if other.num.is_zero():
            raise DenominatorVanishes("division by the zero expression")
        return RationalExpr(
            self.num * other.den,
            self.den * other.num,
            self.subtraction_free and other.subtraction_free,
        )

    def __rtruediv__(self, other):
        return as_ratexpr(other) / self

    def __eq__(self, other):
        try:
            other = as_ratexpr(other)
        except TypeError:
            return NotImplemented
        return rational_eq(self, other)

    def variables(self):
        return self.num.variables() | self.den.variables()

    def __str__(self):
        if self.den == SparsePoly.one():
            return str(self.num)
        return "(%s) / (%s)" % (self.num, self.den)

    def __repr__(self):
        return "RationalExpr(%s)" % self


def as_ratexpr(obj):
    if isinstance(obj, RationalExpr):
        return obj
    return RationalExpr(as_poly(obj))


def rational_eq(a, b):
    """True iff a and b agree as rational functions (cross-multiplication)."""
    a, b = as_ratexpr(a), as_ratexpr(b)
    return (a.num * b.den - b.num * a.den).is_zero()


def _primitive_split(p):
    """Write a nonzero polynomial as content * monomial * primitive part.

    Returns (c, mono, prim) with p = c * prod(v^e for v, e in mono) * prim,
    where c is a Fraction signed so prim's leading coefficient is positive,
    mono collects the variable powers common to every term, and prim has
    coprime integer coefficients."""
    c = _content(p)
    lead = p.terms[max(p.terms, key=_mono_key)]
    if lead < 0:
        c = -c
    monos = iter(p.terms)
    common = dict(next(monos))
    for mono in monos:
        if not common:
            break
        d = dict(mono)
        for v in list(common):
            e = d.get(v, 0)
            if e < common[v]:
                if e:
                    common[v] = e
                else:
                    del common[v]
    terms = {}
    for mono, coeff in p.terms.items():
        stripped = tuple((v, e - common.get(v, 0)) for v, e in mono if e > common.get(v, 0))
        terms[stripped] = coeff / c
    prim = SparsePoly._raw(terms)
    return c, sorted(common.items()), prim


class FactoredRational:
    """A scalar kept in the form coeff * prod_i p_i^{e_i}, e_i integers.

    The p_i are primitive polynomials; equal factors cancel by dictionary
    lookup, so long chains of multiplications and divisions never call a
    polynomial gcd.  Addition expands only the part not shared between the
    two operands and refactors the sum, which keeps the kappa-denominator
    bookkeeping of composed birational swaps compact."""

    __slots__ = ("coeff", "factors")

    def __init__(self, coeff=0, factors=()):
        coeff = coeff if isinstance(coeff, Fraction) else Fraction(coeff)
        merged = []
        if coeff:
            for p, e in factors:
                if not e:
                    continue
                for slot in merged:
                    if slot[0] == p:
                        slot[1] += e
                        break
                else:
                    merged.append([p, e])
        self.coeff = coeff
        self.factors = tuple((p, e) for p, e in merged if e)

    @classmethod
    def from_poly(cls, p):
        p = as_poly(p)
        if p.is_zero():
            return cls(0)
        c, mono, prim = _primitive_split(p)
        factors = [(SparsePoly.variable(v), e) for v, e in mono]
        if not prim.is_constant():
            factors.append((prim, 1))
        else:
            c = c * prim.constant_value()
        return cls(c, factors)

    @classmethod
    def lift(cls, obj):
        if isinstance(obj, cls):
            return obj
        if isinstance(obj, (int, Fraction)):
            return cls(obj)
        if isinstance(obj, SparsePoly):
            return cls.from_poly(obj)
        if isinstance(obj, RationalExpr):
            return cls.from_poly(obj.num) / cls.from_poly(obj.den)
        raise TypeError("cannot lift %r to a factored rational" % (obj,))

    def is_zero(self):
        return self.coeff == 0

    def __bool__(self):
        return self.coeff != 0

    def _inverse(self):
        if not self.coeff:
            raise DenominatorVanishes("division by an identically zero factored rational")
        return FactoredRational(1 / self.coeff, [(p, -e) for p, e in self.factors])

    def __mul__(self, other):
        other = FactoredRational.lift(other)
        if not self.coeff or not other.coeff:
            return FactoredRational(0)
        return FactoredRational(self.coeff * other.coeff, self.factors + other.factors)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e == 0:
            return FactoredRational(1)
        if not self.coeff:
            if e < 0:
                raise DenominatorVanishes("negative power of zero")
            return FactoredRational(0)
        return FactoredRational(self.coeff**e, [(p, k * e) for p, k in self.factors])

    def __truediv__(self, other):
        return self * FactoredRational.lift(other)._inverse()

    def __rtruediv__(self, other):
        return FactoredRational.lift(other) * self._inverse()

    def __neg__(self):
        return FactoredRational(-self.coeff, self.factors)

    def __add__(self, other):
        other = FactoredRational.lift(other)
        if not self.coeff:
            return other
        if not other.coeff:
            return self
        table = [[p, e, 0] for p, e in self.factors]
        for p, e in other.factors:
            for slot in table:
                if slot[0] == p:
                    slot[2] = e
                    break
            else:
                table.append([p, 0, e])
        shared = []
        a_rest = []
        b_rest = []
        for p, ea, eb in table:
            s = min(ea, eb)
            if s:
                shared.append((p, s))
            if ea - s:
                a_rest.append((p, ea - s))
            if eb - s:
                b_rest.append((p, eb - s))
        total = _expand_product(self.coeff, a_rest) + _expand_product(other.coeff, b_rest)
        if total.is_zero():
            return FactoredRational(0)
        return FactoredRational.from_poly(total) * FactoredRational(1, shared)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-FactoredRational.lift(other))

    def __rsub__(self, other):
        return FactoredRational.lift(other) + (-self)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.coeff == other and not self.factors
        if isinstance(other, FactoredRational):
            return rational_eq(self.to_ratexpr(), other.to_ratexpr())
        return NotImplemented

    __hash__ = None

    def to_ratexpr(self):
        """Expand back to a RationalExpr in the underlying variables."""
        num = SparsePoly.constant(Fraction(self.coeff.numerator))
        den = SparsePoly.constant(Fraction(self.coeff.denominator))
        for p, e in self.factors:
            if e > 0:
                num = num * p**e
            else:
                den = den * p ** (-e)
        return RationalExpr(num, den)

    def __str__(self):
        if not self.coeff:
            return "0"
        bits = [] if self.coeff == 1 and self.factors else [str(self.coeff)]
        for p, e in self.factors:
            body = "(%s)" % p
            bits.append(body if e == 1 else "%s^%d" % (body, e))
        return " * ".join(bits)

    def __repr__(self):
        return "FactoredRational(%s)" % self


def _expand_product(coeff, factors):
    # polynomial form of coeff * prod p^e; exponents must be nonnegative
    out = SparsePoly.constant(Fraction(coeff))
    for p, e in factors:
        if e < 0:
            raise ValueError("cannot expand a negative power")
        out = out * p**e
    return out


def _powers(p, d):
    out = [SparsePoly.one()]
    for _ in range(d):
        out.append(out[-1] * p)
    return out


def _subst_poly(p, bindings):
    # substitute into one polynomial; returns (numerator, common denominator),
    # the denominator being prod of q_v^{deg_v(p)} over bound variables
    degs = {}
    for mono in p.terms:
        for v, e in mono:
            if v in bindings and e > degs.get(v, 0):
                degs[v] = e
    num_pow = {v: _powers(bindings[v].num, d) for v, d in degs.items()}
    den_pow = {v: _powers(bindings[v].den, d) for v, d in degs.items()}
    total = SparsePoly.zero()
    for mono, c in p.terms.items():
        md = dict(mono)
        term = SparsePoly.constant(c)
        for v, d in degs.items():
            e = md.pop(v, 0)
            if e:
                term = term * num_pow[v][e]
            if d - e:
                term = term * den_pow[v][d - e]
        for v, e in md.items():
            term = term * SparsePoly.variable(v) ** e
        total = total + term
    denom = SparsePoly.one()
    for v, d in degs.items():
        denom = denom * den_pow[v][d]
    return total, denom


def substitute(e, bindings):
    """Compose a rational expression with bindings var -> expression.

    Unbound variables stay fixed.  Raises DenominatorVanishes if the
    composed denominator is identically zero.
    """
    e = as_ratexpr(e)
    bindings = {v: as_ratexpr(b) for v, b in bindings.items()}
    top_n, top_d = _subst_poly(e.num, bindings)
    bot_n, bot_d = _subst_poly(e.den, bindings)
    if bot_n.is_zero():
        raise DenominatorVanishes("denominator vanishes after substitution")
    return RationalExpr(top_n * bot_d, bot_n * top_d)


def eval_at(e, point):
    """Exact value of a polynomial or rational expression at a point."""
    if isinstance(e, SparsePoly):
        return e.eval_at(point)
    e = as_ratexpr(e)
    d = e.den.eval_at(point)
    if d == 0:
        raise DenominatorVanishes("denominator vanishes at the point")
    return e.num.eval_at(point) / d


def exact_rank(rows):
    """Rank of a matrix of rationals, by fraction-free-enough elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        for i in range(rank + 1, len(m)):
            if m[i][col]:
                f = m[i][col] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank
