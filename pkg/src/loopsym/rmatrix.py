"""The birational S_m action on cyclically colored variable arrays:
kappa-functions, the elementary swap of two neighboring sites, words of
adjacent swaps, and whirl-product commutation checks.

The swap s sends x^{(i)} to y^{(i+1)} kappa_{i+1}/kappa_i and y^{(i)} to
x^{(i-1)} kappa_{i-1}/kappa_i, indices cyclic, and is an involution.  All
components are subtraction-free, which is what makes tropicalization
meaningful downstream."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import NamedTuple

from .lsym import LoopVarArray, whirl, whirl_product
from .ring import (
    FactoredRational,
    SparsePoly,
    as_poly,
    as_ratexpr,
    canon_color,
    rational_eq,
)


class KappaVanishes(ZeroDivisionError):
    """A numeric swap hit the zero locus of some kappa."""


class SwapResult(NamedTuple):
    x_out: tuple
    y_out: tuple


def kappa(n, i, x, y):
    """kappa_i(x, y) = sum_{j=i}^{i+n-1} prod_{k=i+1}^{j} y^{(k)}
    prod_{k=j+1}^{i+n-1} x^{(k)}; n terms, each of degree n-1."""
    total = 0
    for j in range(i, i + n):
        term = 1
        for k in range(i + 1, j + 1):
            term = term * y[canon_color(k, n) - 1]
        for k in range(j + 1, i + n):
            term = term * x[canon_color(k, n) - 1]
        total = total + term
    if isinstance(total, int):
        symbolic = any(isinstance(v, SparsePoly) for v in list(x) + list(y))
        total = as_poly(total) if symbolic else Fraction(total)
    return total


def _swap_numeric(n, x, y):
    x = [Fraction(v) for v in x]
    y = [Fraction(v) for v in y]
    kap = [kappa(n, i, x, y) for i in range(1, n + 1)]
    if any(k == 0 for k in kap):
        raise KappaVanishes("kappa vanishes at the given point")

    def kap_at(i):
        return kap[canon_color(i, n) - 1]

    x_out = []
    y_out = []
    for i in range(1, n + 1):
        x_out.append(y[canon_color(i + 1, n) - 1] * kap_at(i + 1) / kap_at(i))
        y_out.append(x[canon_color(i - 1, n) - 1] * kap_at(i - 1) / kap_at(i))
    return SwapResult(tuple(x_out), tuple(y_out))


def _swap_factored(n, x, y):
    x = [FactoredRational.lift(v) for v in x]
    y = [FactoredRational.lift(v) for v in y]
    kap = [FactoredRational.lift(kappa(n, i, x, y)) for i in range(1, n + 1)]
    if any(k.is_zero() for k in kap):
        raise KappaVanishes("kappa is identically zero for these columns")

    def kap_at(i):
        return kap[canon_color(i, n) - 1]

    x_out = []
    y_out = []
    for i in range(1, n + 1):
        x_out.append(y[canon_color(i + 1, n) - 1] * kap_at(i + 1) / kap_at(i))
        y_out.append(x[canon_color(i - 1, n) - 1] * kap_at(i - 1) / kap_at(i))
    return SwapResult(tuple(x_out), tuple(y_out))


def swap(n, x, y):
    """The elementary birational swap of two site columns.

    x and y are length-n sequences (position = color - 1) of variables or
    numbers.  Symbolic inputs give subtraction-free RationalExpr outputs;
    numeric inputs give exact numbers, raising KappaVanishes on the
    degenerate locus.  FactoredRational inputs stay factored, which is the
    form composition-heavy callers should use."""
    x, y = list(x), list(y)
    if len(x) != n or len(y) != n:
        raise ValueError("need two length-n columns")
    if all(isinstance(v, (int, Fraction)) for v in x + y):
        return _swap_numeric(n, x, y)
    res = _swap_factored(n, x, y)
    if any(isinstance(v, FactoredRational) for v in x + y):
        return res
    return SwapResult(
        tuple(e.to_ratexpr() for e in res.x_out),
        tuple(e.to_ratexpr() for e in res.y_out),
    )


def parse_word(text):
    """PermWord from a string like "s1 s2 s1" (or "1 2 1")."""
    word = []
    for tok in text.split():
        tok = tok.lower().lstrip("s")
        word.append(int(tok))
    return word


def word_grid(vars, word):
    """Act on the variable array by a word of adjacent swaps, leftmost
    first.  Returns the m x n transformed grid (site-major) with
    FactoredRational entries for symbolic input and Fractions for numeric
    input."""
    n, m = vars.n, vars.m
    if vars.is_symbolic():
        grid = [[FactoredRational.from_poly(vars.value(i, j)) for j in range(1, n + 1)]
                for i in range(1, m + 1)]
    else:
        grid = [[Fraction(vars.value(i, j)) for j in range(1, n + 1)]
                for i in range(1, m + 1)]
    for k in word:
        if not 1 <= k <= m - 1:
            raise ValueError("swap index %d out of range for m=%d" % (k, m))
        res = swap(n, grid[k - 1], grid[k])
        grid[k - 1], grid[k] = list(res.x_out), list(res.y_out)
    return grid


def apply_word(vars, word):
    """Act on the variable array by a word of adjacent swaps.

    Swaps are applied leftmost-first.  Returns an m x n grid (site-major)
    of RationalExpr in the original variables for symbolic input, or of
    Fractions for numeric input."""
    grid = word_grid(vars, word)
    if vars.is_symbolic():
        return [[e.to_ratexpr() for e in row] for row in grid]
    return grid


def _random_point_vars(n, m, rng):
    return LoopVarArray.numeric(
        n, m, [[Fraction(rng.randint(1, 10**6)) for _ in range(n)] for _ in range(m)]
    )


def _whirl_product_of_grid(n, grid):
    from .matpoly import MatrixPoly

    P = MatrixPoly.identity(n)
    for column in grid:
        P = P * whirl(n, column)
    return P


def verify_whirl_commutation(n, m, word, points=20, seed=2024):
    """Check M(x_1)...M(x_m) = M(w(x_1))...M(w(x_m)).

    Fully symbolic for n <= 2 and m <= 3, exact evaluation at random
    points otherwise."""
    if n <= 2 and m <= 3:
        vars = LoopVarArray.symbolic(n, m)
        P = whirl_product(vars)
        Q = _whirl_product_of_grid(n, apply_word(vars, word))
        for r in range(1, n + 1):
            for c in range(1, n + 1):
                top = max(len(P.entry(r, c)), len(Q.entry(r, c)))
                for j in range(top):
                    if not rational_eq(
                        as_ratexpr(P.coeff(r, c, j)), as_ratexpr(Q.coeff(r, c, j))
                    ):
                        return False
        return True
    rng = random.Random(seed)
    done = 0
    while done < points:
        vars = _random_point_vars(n, m, rng)
        try:
            grid = apply_word(vars, word)
        except KappaVanishes:
            continue
        P = whirl_product(vars)
        Q = _whirl_product_of_grid(n, grid)
        if P != Q:
            return False
        done += 1
    return True
