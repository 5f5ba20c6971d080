"""Kernel tests: exact polynomial arithmetic, rational equality by
cross-multiplication, substitution, evaluation, differentiation."""

import random
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from loopsym.ring import (
    DenominatorVanishes,
    RationalExpr,
    SparsePoly,
    VarId,
    as_ratexpr,
    canon_color,
    eval_at,
    exact_rank,
    partial_derivative,
    poly_arith,
    rational_eq,
    substitute,
    var,
)

X, Y, Z = VarId(1, 1), VarId(2, 1), VarId(3, 1)
P = SparsePoly.variable

VARS = [X, Y, Z]

monomials = st.lists(st.sampled_from(VARS), max_size=3).map(
    lambda vs: tuple(sorted(Counter(vs).items()))
)
polys = st.dictionaries(monomials, st.integers(-4, 4), max_size=5).map(SparsePoly)
pos_polys = st.dictionaries(
    monomials, st.integers(1, 4), min_size=1, max_size=4
).map(SparsePoly)


def test_canonical_color():
    assert canon_color(0, 2) == 2
    assert canon_color(3, 2) == 1
    assert var(1, 0, 2) == VarId(1, 2)
    assert var(1, 3, 2) == VarId(1, 1)
    assert var(2, 5, 3) == VarId(2, 2)
    assert var(4, 2, 7) == VarId(4, 2)


def test_difference_of_squares():
    got = poly_arith(P(X) + P(Y), P(X) - P(Y), "mul")
    assert got == P(X) ** 2 - P(Y) ** 2


def test_distributes_over_colored_vars():
    x11, x21 = var(1, 1, 2), var(2, 1, 2)
    x12 = var(1, 2, 2)
    got = poly_arith(P(x11) + P(x21), P(x12), "mul")
    assert got == P(x11) * P(x12) + P(x21) * P(x12)


@given(polys)
def test_additive_identity(p):
    assert poly_arith(p, SparsePoly.zero(), "add") == p
    assert p - p == SparsePoly.zero()


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@given(polys, polys)
def test_mul_term_count_bound(a, b):
    assert len((a * b).terms) <= len(a.terms) * len(b.terms)


def test_rational_eq_reflexive_and_common_factor():
    e = RationalExpr(P(X), P(Y))
    assert rational_eq(e, e)
    lhs = RationalExpr(P(X) ** 2 - P(Y) ** 2, P(X) - P(Y))
    rhs = RationalExpr(P(X) + P(Y))
    assert rational_eq(lhs, rhs)
    assert not rational_eq(RationalExpr(P(X), P(Y)), RationalExpr(P(Y), P(X)))


@given(polys, pos_polys, pos_polys, pos_polys)
def test_rational_eq_is_an_equivalence(p, q, r, s):
    # a, b, c differ only by nonzero polynomial factors, so all three agree
    a = RationalExpr(p, q)
    b = RationalExpr(p * r, q * r)
    c = RationalExpr(p * s, q * s)
    assert rational_eq(a, a)
    assert rational_eq(a, b) and rational_eq(b, a)
    assert rational_eq(b, c) and rational_eq(a, c)


def test_rational_eq_agrees_with_eval():
    rng = random.Random(20240811)
    lhs = RationalExpr(P(X) ** 2 - P(Y) ** 2, P(X) - P(Y))
    rhs = RationalExpr(P(X) + P(Y))
    bad = RationalExpr(P(Y), P(X))
    seen_diff = False
    for _ in range(20):
        pt = {v: Fraction(rng.randint(1, 10**6)) for v in VARS}
        try:
            lv, rv = eval_at(lhs, pt), eval_at(rhs, pt)
        except DenominatorVanishes:
            continue
        assert lv == rv
        if eval_at(bad, pt) != rv:
            seen_diff = True
    assert seen_diff


def test_substitute_symmetric_swap():
    e = as_ratexpr(P(X) + P(Y))
    got = substitute(e, {X: as_ratexpr(P(Y)), Y: as_ratexpr(P(X))})
    assert rational_eq(got, e)


def test_substitute_numeric():
    e = RationalExpr(P(X), P(Y))
    got = substitute(e, {X: 1, Y: 2})
    assert rational_eq(got, RationalExpr(SparsePoly.constant(Fraction(1, 2))))


def test_substitute_leaves_unbound_fixed():
    e = RationalExpr(P(X) * P(Z), P(Y))
    got = substitute(e, {X: P(Y)})
    assert rational_eq(got, RationalExpr(P(Y) * P(Z), P(Y)))


def test_substitute_zero_denominator_rejected():
    e = RationalExpr(SparsePoly.one(), P(X) - P(Y))
    with pytest.raises(DenominatorVanishes):
        substitute(e, {X: P(Z), Y: P(Z)})


@given(pos_polys, pos_polys, pos_polys, pos_polys)
@settings(max_examples=40)
def test_substitute_then_eval_functoriality(pn, pd, bn, bd):
    rng = random.Random(hash((str(pn), str(bn))) & 0xFFFF)
    e = RationalExpr(pn, pd)
    bindings = {X: RationalExpr(bn, bd)}
    point = {v: Fraction(rng.randint(1, 50)) for v in VARS}
    inner = {v: point[v] for v in VARS}
    inner[X] = eval_at(bindings[X], point)
    assert eval_at(substitute(e, bindings), point) == eval_at(e, inner)


def test_eval_examples():
    assert eval_at(P(X) + P(Y), {X: 1, Y: 2}) == 3
    e1 = P(var(1, 1, 2)) + P(var(2, 1, 2)) + P(var(3, 1, 2))
    ones = {v: 1 for v in e1.variables()}
    assert eval_at(e1, ones) == 3
    with pytest.raises(DenominatorVanishes):
        eval_at(RationalExpr(P(X), P(X) - P(Y)), {X: 1, Y: 1})


def test_partial_derivative_basics():
    assert partial_derivative(P(X) ** 2, X) == P(X).scale(2)
    assert partial_derivative(P(X) * P(Y), Y) == P(X)
    assert partial_derivative(P(X), Y) == SparsePoly.zero()


def test_partial_derivative_of_printed_e2():
    # d/dx_1^(1) of x1^(1)x2^(2) + x2^(1)x3^(2) + x1^(1)x3^(2)
    x11, x21 = var(1, 1, 2), var(2, 1, 2)
    x22, x32 = var(2, 2, 2), var(3, 2, 2)
    e2 = P(x11) * P(x22) + P(x21) * P(x32) + P(x11) * P(x32)
    assert partial_derivative(e2, x11) == P(x22) + P(x32)


def test_denominator_normalization():
    e = RationalExpr(P(X).scale(2), P(Y).scale(4))
    assert e.den == P(Y)
    assert e.num == P(X).scale(Fraction(1, 2))
    f = RationalExpr(P(X), -P(Y))
    assert f.den == P(Y)
    assert f.num == -P(X)


def test_zero_denominator_rejected():
    with pytest.raises(DenominatorVanishes):
        RationalExpr(P(X), SparsePoly.zero())


@given(pos_polys, pos_polys, pos_polys)
@settings(max_examples=40)
def test_subtraction_free_expressions_are_positive(a, b, c):
    e = (as_ratexpr(a) + as_ratexpr(b)) * as_ratexpr(c) / as_ratexpr(b)
    assert e.subtraction_free
    rng = random.Random(7)
    pt = {v: Fraction(rng.randint(1, 100), rng.randint(1, 9)) for v in VARS}
    assert eval_at(e, pt) > 0


def test_subtraction_clears_the_flag():
    a = as_ratexpr(P(X) + P(Y))
    assert a.subtraction_free
    assert not (a - as_ratexpr(P(X))).subtraction_free
    assert not (-a).subtraction_free


def test_canonical_printing():
    x11, x21 = var(1, 1, 2), var(2, 1, 2)
    x22, x32 = var(2, 2, 2), var(3, 2, 2)
    e2 = P(x11) * P(x22) + P(x21) * P(x32) + P(x11) * P(x32)
    assert str(e2) == "x[1]^(1)*x[2]^(2) + x[1]^(1)*x[3]^(2) + x[2]^(1)*x[3]^(2)"
    assert str(SparsePoly.zero()) == "0"
    assert str(P(X) - P(Y).scale(2)) == "x[1]^(1) - 2*x[2]^(1)"


def test_exact_rank():
    assert exact_rank([[1, 0], [0, 1]]) == 2
    assert exact_rank([[1, 2], [2, 4]]) == 1
    assert exact_rank([[0, 0], [0, 0]]) == 0
    assert exact_rank([[Fraction(1, 3), 1], [1, 3]]) == 1
