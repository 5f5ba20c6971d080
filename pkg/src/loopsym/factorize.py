"""Total nonnegativity and factorization of matrix polynomials.

A matrix polynomial embeds into an infinite block-Toeplitz array whose
minors decide total nonnegativity; finite windows of that array give a
checkable necessary condition.  Nonnegativity certificates also come from
evaluating loop skew Schur functions, written as Jacobi-Trudi determinants,
at a table of loop elementary values.  The converse direction is numeric:
a whirl factorization recovered by peeling one right factor at a time with
a damped Newton iteration, validated by recomposing the product."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy

from .lsym import LoopVarArray, whirl, whirl_product
from .matpoly import MatrixPoly, det_expand, tadd, tmul
from .ring import canon_color
from .rmatrix import KappaVanishes, apply_word
from .shapes import asshape


class NotUniUpperTriangular(ValueError):
    """P(0) must have unit diagonal and zero entries below it."""


class NoRealFactorization(RuntimeError):
    """The polynomial has complex roots, so no real whirl product exists."""


class NoConvergence(RuntimeError):
    """Newton peeling failed; the input may not be generic."""


def _is_exact(value):
    return isinstance(value, (int, Fraction))


# ---------------------------------------------------------------------------
# block-Toeplitz windows


class BlockToeplitzWindow:
    """A w x w block window of the infinite periodic array of P(t).

    Block (I, J) holds the coefficient of t^(J - I + offset); the default
    offset 0 puts the constant term on the block diagonal.
    """

    __slots__ = ("base", "window_blocks", "offset", "matrix")

    def __init__(self, base, window_blocks, offset=0):
        if window_blocks < 1:
            raise ValueError("need at least one block")
        n = base.n
        rows = []
        for bi in range(window_blocks):
            for i in range(1, n + 1):
                row = []
                for bj in range(window_blocks):
                    p = bj - bi + offset
                    for j in range(1, n + 1):
                        row.append(base.coeff(i, j, p) if p >= 0 else 0)
                rows.append(tuple(row))
        self.base = base
        self.window_blocks = window_blocks
        self.offset = offset
        self.matrix = tuple(rows)

    @property
    def size(self):
        return self.base.n * self.window_blocks

    def entry(self, i, j):
        # 1-indexed
        return self.matrix[i - 1][j - 1]

    def minor(self, rows, cols):
        """Determinant of the submatrix on 1-indexed row and column sets."""
        sub = [[self.matrix[i - 1][j - 1] for j in cols] for i in rows]
        return det_expand(sub)

    def __repr__(self):
        return "BlockToeplitzWindow(%r, %d, offset=%d)" % (
            self.base, self.window_blocks, self.offset)


def toeplitz_window(P, w, offset=0):
    """Realize the w-block window of the block-Toeplitz array of P."""
    return BlockToeplitzWindow(P, w, offset)


# ---------------------------------------------------------------------------
# windowed minor test


@dataclass(frozen=True)
class TnnReport:
    """Outcome of a finite minor sweep; passing is only a necessary
    condition for total nonnegativity, so the scope is part of the data."""

    window_blocks: int
    max_order: int
    checked: int
    violations: tuple

    @property
    def passed(self):
        return not self.violations


def tnn_check(P, w, max_order, tol=None):
    """Evaluate every minor of order <= max_order of the w-block window.

    Exact coefficients are tested exactly; floats against a small relative
    tolerance (and in bulk through numpy, since the minor count grows like
    binom(nw, order)^2).  Returns the violations as (row-set, col-set, value).
    """
    window = toeplitz_window(P, w)
    size = window.size
    exact = all(_is_exact(c) for row in window.matrix for c in row)
    if tol is None:
        scale = max((abs(c) for row in window.matrix for c in row), default=1)
        tol = 0 if exact else 1e-9 * float(max(scale, 1))
    if not exact:
        return _tnn_check_float(window, w, max_order, tol)
    violations = []
    checked = 0
    for order in range(1, min(max_order, size) + 1):
        for rows in itertools.combinations(range(1, size + 1), order):
            for cols in itertools.combinations(range(1, size + 1), order):
                value = window.minor(rows, cols)
                checked += 1
                if value < -tol:
                    violations.append((rows, cols, value))
    return TnnReport(w, max_order, checked, tuple(violations))


def _tnn_check_float(window, w, max_order, tol):
    mat = numpy.array([[float(c) for c in row] for row in window.matrix])
    size = mat.shape[0]
    violations = []
    checked = 0
    for order in range(1, min(max_order, size) + 1):
        picks = list(itertools.combinations(range(size), order))
        idx = numpy.array(picks)
        sub = mat[idx][:, :, idx]              # (rows, k, cols, k)
        dets = numpy.linalg.det(sub.transpose(0, 2, 1, 3))
        checked += dets.size
        for a, b in numpy.argwhere(dets < -tol):
            violations.append(
                (
                    tuple(r + 1 for r in picks[a]),
                    tuple(c + 1 for c in picks[b]),
                    float(dets[a, b]),
                )
            )
    return TnnReport(w, max_order, checked, tuple(violations))


# ---------------------------------------------------------------------------
# skew Schur certificates


def _e_at(e_table, k, r, n):
    if k == 0:
        return 1
    if k < 0:
        return 0
    return e_table.get((k, canon_color(r, n)), 0)


def skew_schur_value(e_table, shape, r, n):
    """One loop skew Schur value: the Jacobi-Trudi determinant
    det(e_{lam_i - mu_j - i + j}^{(r - j + 1 + mu_j)}) with lam, mu the
    conjugates of the outer and inner shape, evaluated in e_table."""
    shape = asshape(shape)
    lam = shape.outer.conjugate()
    mu = shape.inner.conjugate()
    size = shape.outer.part(1)
    if size == 0:
        return 1
    mat = [
        [
            _e_at(e_table, lam.part(i) - mu.part(j) - i + j,
                  r - j + 1 + mu.part(j), n)
            for j in range(1, size + 1)
        ]
        for i in range(1, size + 1)
    ]
    return det_expand(mat)


@dataclass(frozen=True)
class CertificateReport:
    checked: int
    negatives: tuple

    @property
    def passed(self):
        return not self.negatives


def skew_schur_certificate(e_table, shapes, n, r_values=None, tol=None):
    """Evaluate loop skew Schur functions at the e-table and report the
    negative ones as (shape, r, value)."""
    if r_values is None:
        r_values = range(1, n + 1)
    exact = all(_is_exact(v) for v in e_table.values())
    if tol is None:
        scale = max((abs(v) for v in e_table.values()), default=1)
        tol = 0 if exact else 1e-9 * float(max(scale, 1))
    negatives = []
    checked = 0
    for shape in shapes:
        shape = asshape(shape)
        for r in r_values:
            value = skew_schur_value(e_table, shape, r, n)
            checked += 1
            if value < -tol:
                negatives.append((shape, r, value))
    return CertificateReport(checked, tuple(negatives))


# ---------------------------------------------------------------------------
# whirl factorization


@dataclass(frozen=True)
class FactorizationResult:
    params: LoopVarArray
    residual: float
    converged: bool


def _require_uni_upper(P):
    for i in range(1, P.n + 1):
        if not math.isclose(float(P.coeff(i, i, 0)), 1.0, abs_tol=1e-12):
            raise NotUniUpperTriangular("diagonal constant term is not 1")
        for j in range(1, i):
            if abs(float(P.coeff(i, j, 0))) > 1e-12:
                raise NotUniUpperTriangular("nonzero constant term below diagonal")


def _float_matrix(P):
    return P.map_scalars(float)


def _max_coeff(P):
    return max((abs(c) for row in P.rows for cell in row for c in cell), default=0.0)


def _residual(P, Q):
    top = max(P.max_degree(), Q.max_degree())
    worst = 0.0
    for i in range(1, P.n + 1):
        for j in range(1, P.n + 1):
            for d in range(top + 1):
                worst = max(worst, abs(float(P.coeff(i, j, d)) - float(Q.coeff(i, j, d))))
    return worst


def _factorize_scalar(P, m, tol):
    coeffs = [float(c) for c in P.rows[0][0]]
    deg = len(coeffs) - 1
    if deg > m:
        raise ValueError("degree %d exceeds the %d-fold product" % (deg, m))
    monic = coeffs + [0.0] * (m - deg)        # z^m + a_1 z^(m-1) + ... + a_m
    roots = numpy.roots(monic) if m else numpy.array([])
    params = []
    for z in roots:
        if abs(z.imag) > 1e-8 * (1 + abs(z)):
            raise NoRealFactorization("complex roots: %s" % z)
        params.append(-float(z.real))
    params.sort(reverse=True)
    arr = LoopVarArray.numeric(1, m, [[x] for x in params])
    residual = _residual(_float_matrix(P), whirl_product(arr))
    return FactorizationResult(arr, residual, residual <= tol)


def _cell_det(mat):
    # determinant of a matrix of t-polynomial cells
    size = len(mat)
    if size == 0:
        return (1,)
    if size == 1:
        return mat[0][0]
    total = ()
    for j, pivot in enumerate(mat[0]):
        if not pivot:
            continue
        minor = [row[:j] + row[j + 1:] for row in mat[1:]]
        term = tmul(pivot, _cell_det(minor))
        if j % 2:
            term = tuple(-c for c in term)
        total = tadd(total, term)
    return total


def _adjugate(P):
    n = P.n
    cells = [list(row) for row in P.rows]
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [
                [cells[a][b] for b in range(n) if b != j]
                for a in range(n) if a != i
            ]
            cof = _cell_det(minor)
            if (i + j) % 2:
                cof = tuple(-c for c in cof)
            out[j][i] = cof
    return MatrixPoly(n, out)


def _clean_cell(cell, eps):
    coeffs = [0.0 if abs(c) < eps else float(c) for c in cell]
    while coeffs and coeffs[-1] == 0.0:
        coeffs.pop()
    return tuple(coeffs)


def _divide_linear(cell, beta, eps):
    """Divide a t-polynomial by (1 + beta t); the remainder must be tiny."""
    if not cell:
        return (), 0.0
    out = []
    carry = 0.0
    for c in cell:
        carry = float(c) - beta * carry
        out.append(carry)
    rem = abs(out.pop()) if len(out) > 1 or abs(out[-1]) > eps else 0.0
    if not out:
        out = [0.0]
    return tuple(out), rem


def _whirl_sign(n):
    # det M(a) = 1 + (-1)^(n+1) a_1...a_n t
    return 1.0 if n % 2 else -1.0


def _kernel_vector(a):
    n = len(a)
    u = [0.0] * n
    u[n - 1] = 1.0
    for i in range(n - 2, -1, -1):
        u[i] = -a[i] * u[i + 1]
    return u


def _peel_conditions(P, a):
    """P(t*) applied to the kernel vector of M(a)(t*), where t* is the root
    of det M(a); all entries of P adj(M(a)) are divisible by the
    determinant exactly when this vanishes."""
    n = P.n
    prod = 1.0
    for x in a:
        prod *= x
    if abs(prod) < 1e-12:
        return None
    tstar = -1.0 / (_whirl_sign(n) * prod)
    if abs(tstar) > 1e8:
        return None
    u = _kernel_vector(a)
    out = []
    for i in range(1, n + 1):
        acc = 0.0
        for j in range(1, n + 1):
            cell = P.rows[i - 1][j - 1]
            val = 0.0
            for c in reversed(cell):
                val = val * tstar + float(c)
            acc += val * u[j - 1]
        out.append(acc)
    return out


def _newton_peel(P, guess, max_iter, scale, rng):
    n = P.n
    a = list(guess)
    fval = _peel_conditions(P, a)
    if fval is None:
        return None
    norm = max(abs(v) for v in fval)
    for _ in range(max_iter):
        if norm <= 1e-12 * scale:
            return a
        jac = numpy.zeros((n, n))
        for k in range(n):
            h = 1e-7 * max(1.0, abs(a[k]))
            bumped = list(a)
            bumped[k] += h
            fb = _peel_conditions(P, bumped)
            if fb is None:
                return None
            for i in range(n):
                jac[i, k] = (fb[i] - fval[i]) / h
        try:
            step = numpy.linalg.solve(jac, -numpy.array(fval))
        except numpy.linalg.LinAlgError:
            step, *_ = numpy.linalg.lstsq(jac, -numpy.array(fval), rcond=None)
        lam = 1.0
        improved = False
        for _ in range(30):
            cand = [a[i] + lam * step[i] for i in range(n)]
            fc = _peel_conditions(P, cand)
            if fc is not None:
                cnorm = max(abs(v) for v in fc)
                if cnorm < norm:
                    a, fval, norm = cand, fc, cnorm
                    improved = True
                    break
            lam /= 2
        if not improved:
            return None
    return a if norm <= 1e-10 * scale else None


def _initial_guess(P, m):
    # average the product's first-order terms over the remaining factors
    n = P.n
    guess = []
    for i in range(1, n):
        guess.append(max(float(P.coeff(i, i + 1, 0)) / m, 0.05))
    guess.append(max(float(P.coeff(n, 1, 1)) / m, 0.05))
    return guess


def _peel_rightmost(P, remaining, scale, rng, max_iter):
    attempts = [_initial_guess(P, remaining)]
    attempts.extend(
        [rng.uniform(0.05, 1.5) for _ in range(P.n)] for _ in range(12)
    )
    for guess in attempts:
        a = _newton_peel(P, guess, max_iter, scale, rng)
        if a is not None:
            return a
    raise NoConvergence("peeling stalled; the polynomial may not be generic")


def _divide_right(P, a, eps):
    """The quotient P(t) M(a)^(-1), which must again be polynomial."""
    n = P.n
    Q = P * _adjugate(_float_matrix(whirl(n, a)))
    beta = _whirl_sign(n) * math.prod(a)
    rows = []
    worst = 0.0
    for row in Q.rows:
        out = []
        for cell in row:
            quot, rem = _divide_linear(cell, beta, eps)
            worst = max(worst, rem)
            out.append(_clean_cell(quot, eps))
        rows.append(out)
    return MatrixPoly(n, rows), worst


def whirl_factorize(P, m, tol=1e-8, max_iter=60, seed=0):
    """Factor P(t) into m whirls, numerically.

    Peels the rightmost factor by solving the divisibility conditions with
    a damped Newton iteration, then recurses on the quotient; for n = 1
    the factors come from polynomial roots instead.  The result carries
    the recomposition residual; parameters are only determined up to the
    permutation action, so compare with orbit_match rather than directly.
    """
    _require_uni_upper(P)
    if m < 1:
        raise ValueError("need at least one factor")
    if P.n == 1:
        return _factorize_scalar(P, m, tol)
    rng = random.Random(seed)
    work = _float_matrix(P)
    scale = max(_max_coeff(work), 1.0)
    eps = 1e-10 * scale
    columns = []
    for remaining in range(m, 1, -1):
        a = _peel_rightmost(work, remaining, scale, rng, max_iter)
        columns.append([float(x) for x in a])
        work, _ = _divide_right(work, a, eps)
    last = [float(work.coeff(i, i + 1, 0)) for i in range(1, P.n)]
    last.append(float(work.coeff(P.n, 1, 1)))
    columns.append(last)
    columns.reverse()
    arr = LoopVarArray.numeric(P.n, m, columns)
    residual = _residual(_float_matrix(P), whirl_product(arr))
    return FactorizationResult(arr, residual, residual <= tol)


# ---------------------------------------------------------------------------
# orbit comparison


def _sorting_word(perm):
    arr = list(perm)
    word = []
    changed = True
    while changed:
        changed = False
        for k in range(len(arr) - 1):
            if arr[k] > arr[k + 1]:
                arr[k], arr[k + 1] = arr[k + 1], arr[k]
                word.append(k + 1)
                changed = True
    return word


def _as_fraction_array(params):
    values = [
        [Fraction(float(params.value(i, j))) for j in range(1, params.n + 1)]
        for i in range(1, params.m + 1)
    ]
    return LoopVarArray.numeric(params.n, params.m, values)


def orbit_match(params_a, params_b, tol=1e-6):
    """Whether some word of swaps carries one parameter array to the other.

    Products are compared first: arrays in one orbit share their whirl
    product, so differing products end the search immediately.
    """
    if params_a.n != params_b.n or params_a.m != params_b.m:
        raise ValueError("parameter arrays must share n and m")
    n, m = params_a.n, params_a.m
    prod_a = whirl_product(_float_matrix_params(params_a))
    prod_b = whirl_product(_float_matrix_params(params_b))
    if _residual(prod_a, prod_b) > tol * 100:
        return False
    target = [
        [float(params_b.value(i, j)) for j in range(1, n + 1)]
        for i in range(1, m + 1)
    ]
    source = _as_fraction_array(params_a)
    for perm in itertools.permutations(range(1, m + 1)):
        try:
            grid = apply_word(source, _sorting_word(perm))
        except KappaVanishes:
            continue
        close = all(
            abs(float(grid[i][j]) - target[i][j]) <= tol
            for i in range(m) for j in range(n)
        )
        if close:
            return True
    return False


def _float_matrix_params(params):
    values = [
        [float(params.value(i, j)) for j in range(1, params.n + 1)]
        for i in range(1, params.m + 1)
    ]
    return LoopVarArray.numeric(params.n, params.m, values)
