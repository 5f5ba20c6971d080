"""Square matrices whose entries are polynomials in t, generic over the
scalar coefficients (SparsePoly, Fraction, int, or float).

A t-polynomial is stored as a tuple of scalar coefficients, constant term
first, trailing zeros stripped."""

from __future__ import annotations

from fractions import Fraction

from .ring import SparsePoly


class MalformedMatrix(ValueError):
    """Constant-term pattern incompatible with a table of loop e's."""


def _zer(x):
    return x.is_zero() if isinstance(x, SparsePoly) else x == 0


def _one(x):
    if isinstance(x, SparsePoly):
        return x == SparsePoly.one()
    return x == 1


def tstrip(coeffs):
    coeffs = list(coeffs)
    while coeffs and _zer(coeffs[-1]):
        coeffs.pop()
    return tuple(coeffs)


def tadd(p, q):
    out = list(p) + [0] * max(0, len(q) - len(p))
    for i, c in enumerate(q):
        out[i] = out[i] + c
    return tstrip(out)


def tmul(p, q):
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if _zer(a):
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return tstrip(out)


class MatrixPoly:
    """n x n matrix of t-polynomials; treat as immutable."""

    __slots__ = ("n", "rows")

    def __init__(self, n, rows):
        self.n = n
        self.rows = tuple(
            tuple(tstrip(cell) for cell in row) for row in rows
        )
        if len(self.rows) != n or any(len(r) != n for r in self.rows):
            raise ValueError("matrix must be %d x %d" % (n, n))

    @classmethod
    def identity(cls, n):
        return cls(n, [[(1,) if i == j else () for j in range(n)] for i in range(n)])

    def entry(self, r, c):
        # 1-indexed
        return self.rows[r - 1][c - 1]

    def coeff(self, r, c, j):
        cell = self.rows[r - 1][c - 1]
        return cell[j] if j < len(cell) else 0

    def max_degree(self):
        return max((len(cell) - 1 for row in self.rows for cell in row if cell), default=0)

    def __mul__(self, other):
        if not isinstance(other, MatrixPoly) or other.n != self.n:
            return NotImplemented
        n = self.n
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = ()
                for k in range(n):
                    acc = tadd(acc, tmul(self.rows[i][k], other.rows[k][j]))
                row.append(acc)
            out.append(row)
        return MatrixPoly(n, out)

    def map_scalars(self, f):
        return MatrixPoly(
            self.n, [[tuple(f(c) for c in cell) for cell in row] for row in self.rows]
        )

    def to_coeff_matrices(self):
        """List of n x n scalar matrices, index = power of t."""
        top = self.max_degree()
        return [
            [[self.coeff(r, c, j) for c in range(1, self.n + 1)]
             for r in range(1, self.n + 1)]
            for j in range(top + 1)
        ]

    @classmethod
    def from_coeff_matrices(cls, n, mats):
        rows = [
            [tuple(mat[i][j] for mat in mats) for j in range(n)] for i in range(n)
        ]
        return cls(n, rows)

    def __eq__(self, other):
        if not isinstance(other, MatrixPoly):
            return NotImplemented
        if self.n != other.n:
            return False
        for ra, rb in zip(self.rows, other.rows):
            for a, b in zip(ra, rb):
                if len(a) != len(b):
                    return False
                if any(not _zer(x - y) for x, y in zip(a, b)):
                    return False
        return True

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return "MatrixPoly(%d, %r)" % (self.n, [list(r) for r in self.rows])


def det_expand(mat):
    """Determinant by cofactor expansion with zero pruning; generic scalars."""
    size = len(mat)
    if size == 0:
        return 1
    if size == 1:
        return mat[0][0]
    best = min(range(size), key=lambda i: sum(not _zer(x) for x in mat[i]))
    total = 0
    for j, pivot in enumerate(mat[best]):
        if _zer(pivot):
            continue
        minor = [row[:j] + row[j + 1 :] for i, row in enumerate(mat) if i != best]
        term = pivot * det_expand(minor)
        total = total + term if (best + j) % 2 == 0 else total - term
    return total


def extract_e(P):
    """Read the loop e table out of a matrix polynomial.

    Entry (r, c) of P must be sum_j e^{(r)}_{c-r+jn} t^j, so at t = 0 the
    matrix is uni-upper-triangular; violations raise MalformedMatrix.
    Returns {(k, r): value} for 1 <= k <= n * max_degree, 1 <= r <= n.
    """
    n = P.n
    for r in range(1, n + 1):
        if not _one(P.coeff(r, r, 0)):
            raise MalformedMatrix("diagonal constant term is not 1 at row %d" % r)
        for c in range(1, r):
            if not _zer(P.coeff(r, c, 0)):
                raise MalformedMatrix(
                    "nonzero constant term below the diagonal at (%d, %d)" % (r, c)
                )
    table = {}
    top = n * P.max_degree()
    for r in range(1, n + 1):
        for k in range(1, top + 1):
            c = (r + k - 1) % n + 1
            j = (k - (c - r)) // n
            table[(k, r)] = P.coeff(r, c, j)
    return table
