"""Loop alternants and the ratio-of-alternants route to loop Schur
functions.

The alternant a^{(r)}_alpha is an m x m determinant whose (i, j) entry is
the transposition t_{m-j+1,m} applied (birationally) to the descending
color monomial x_m^{(r)} x_m^{(r-1)} ... x_m^{(r-alpha_i+1)}.  Under the
word realization of t_{a,b} used here, the site-m variables pick up one
color shift per swap on the way to site m-j+1, and the quotient identity
they satisfy is

    a^{(r+m-2)}_{lambda+delta} / a^{(r+m-2)}_delta = s_lambda^{(r-1)},

which for two sites is the familiar a^{(r)}/a^{(r)} form.  The identity
was cross-checked exhaustively against the tableau and Jacobi-Trudi
routes (all lambda inside a 2x2 box, n <= 3, m = 2, 3, every color)."""

from __future__ import annotations

from fractions import Fraction

from .lsym import LoopVarArray
from .matpoly import det_expand
from .ring import FactoredRational, as_ratexpr, canon_color
from .rmatrix import word_grid
from .shapes import aspartition


class DegenerateDenominator(ZeroDivisionError):
    """The staircase alternant vanished."""


def transposition_word(a, b):
    """t_{a,b} as adjacent swaps: s_{b-1} ... s_{a+1} s_a s_{a+1} ... s_{b-1}."""
    if a > b:
        a, b = b, a
    down = list(range(b - 1, a - 1, -1))
    return down + list(range(a + 1, b))


def alternant_matrix(n, m, alpha, r, vars=None):
    """The m x m matrix behind a^{(r)}_alpha.

    Column j holds the t_{m-j+1,m} image of the site-m monomials; row i
    multiplies the alpha_i descending colors r, r-1, ...  Entries are
    FactoredRational for symbolic input and Fraction for numeric input."""
    alpha = tuple(alpha)
    if len(alpha) != m:
        raise ValueError("alpha must have length m")
    if any(a <= b for a, b in zip(alpha, alpha[1:])) or alpha[-1] < 0:
        raise ValueError("alpha must be strictly decreasing and nonnegative")
    if vars is None:
        vars = LoopVarArray.symbolic(n, m)
    columns = []
    for j in range(1, m + 1):
        grid = word_grid(vars, transposition_word(m - j + 1, m))
        columns.append(grid[m - 1])
    one = FactoredRational(1) if vars.is_symbolic() else Fraction(1)
    mat = []
    for ai in alpha:
        row = []
        for j in range(m):
            entry = one
            for u in range(ai):
                entry = entry * columns[j][canon_color(r - u, n) - 1]
            row.append(entry)
        mat.append(row)
    return mat


def loop_alternant(n, m, alpha, r, vars=None):
    """The loop alternant a^{(r)}_alpha as a RationalExpr."""
    out = det_expand(alternant_matrix(n, m, alpha, r, vars))
    if isinstance(out, FactoredRational):
        return out.to_ratexpr()
    return as_ratexpr(out)


def schur_via_alternants(n, m, lam, r, vars=None):
    """Loop Schur s_lambda^{(r-1)} as a ratio of alternants.

    Both alternants are taken at color r + m - 2, the superscript at which
    the quotient reproduces s_lambda^{(r-1)}; for m = 2 this is the plain
    a^{(r)}_{lambda+delta} / a^{(r)}_delta."""
    lam = aspartition(lam)
    if len(lam) > m:
        raise ValueError("lambda must have at most m parts")
    c = canon_color(r + m - 2, n)
    delta = tuple(range(m - 1, -1, -1))
    shifted = tuple(lam.part(i + 1) + delta[i] for i in range(m))
    num = loop_alternant(n, m, shifted, c, vars)
    den = loop_alternant(n, m, delta, c, vars)
    if den.num.is_zero():
        raise DegenerateDenominator("staircase alternant vanished for these variables")
    return num / den
