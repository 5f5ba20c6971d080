"""Tropical layer: min-plus expression trees, the combinatorial R-matrix on
one-row tableaux, cocharge of words, highest-weight rows b(T), and the energy
statistic.

Tropicalization replaces (+, *, /) by (min, +, -) in a subtraction-free
rational expression.  Applied to the birational swap of two variable columns
it yields the combinatorial R-matrix: the unique length-swapping bijection on
pairs of one-row tableaux that commutes with jeu de taquin.  Both routes are
implemented (min-plus swap, and exhaustive search filtered by equal insertion
tableaux) so each can certify the other.

Energy of a tableau T is the minimum, over semistandard fillings of a
rectangle-scaled staircase, of a weight built from the row multiplicities of
T; it is compared against the cocharge of the reading word.  Two published
index conventions are in circulation for each statistic, and they do not
agree case by case, so both are exposed:

* ``cocharge(u, rule="right")`` increments the index when the next underlined
  letter lies to the right (wrap-around); ``rule="left"`` increments on the
  left.  The right rule reproduces the worked value 4 on the word
  3222311111233; the left rule is the one that matches energy exhaustively.
* ``energy(T, convention="direct")`` substitutes the multiplicity vector of
  letter i at site i; ``convention="reversed"`` substitutes site m+1-i.  The
  direct convention reproduces the worked minimum 4; the reversed one
  satisfies energy = cocharge(reading word, rule="left") on every small case.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .ring import VarId, as_ratexpr, canon_color
from .shapes import Partition, Tableau, content, rsk_insert, ssyt_enumerate


class NotSubtractionFree(ValueError):
    """Tropicalization was asked for an expression with mixed signs."""


class NonPartitionWeight(ValueError):
    """A word or tableau whose letter multiplicities are not a partition."""


class SearchFailure(RuntimeError):
    """The jeu-de-taquin search did not find a unique partner pair."""


# ---------------------------------------------------------------------------
# min-plus expression trees


class TropExpr:
    """Expression tree with integer/variable leaves and nodes min, +, -."""

    __slots__ = ("kind", "args")

    def __init__(self, kind, args):
        if kind not in ("var", "const", "add", "sub", "min"):
            raise ValueError("unknown node kind %r" % (kind,))
        self.kind = kind
        self.args = args

    @classmethod
    def variable(cls, vid):
        return cls("var", vid)

    @classmethod
    def const(cls, value):
        return cls("const", int(value))

    @classmethod
    def add(cls, *children):
        if not children:
            return cls.const(0)
        if len(children) == 1:
            return children[0]
        return cls("add", tuple(children))

    @classmethod
    def sub(cls, a, b):
        return cls("sub", (a, b))

    @classmethod
    def minimum(cls, *children):
        if not children:
            raise ValueError("min of nothing")
        if len(children) == 1:
            return children[0]
        return cls("min", tuple(children))

    def eval(self, point):
        """Value at an assignment of numbers to variable ids."""
        if self.kind == "var":
            return point[self.args]
        if self.kind == "const":
            return self.args
        vals = [child.eval(point) for child in self.args]
        if self.kind == "add":
            return sum(vals)
        if self.kind == "sub":
            return vals[0] - vals[1]
        return min(vals)

    def __eq__(self, other):
        if not isinstance(other, TropExpr):
            return NotImplemented
        return self.kind == other.kind and self.args == other.args

    def __hash__(self):
        return hash((self.kind, self.args))

    def __str__(self):
        if self.kind == "var":
            return str(self.args)
        if self.kind == "const":
            return str(self.args)
        if self.kind == "min":
            return "min(%s)" % ", ".join(str(c) for c in self.args)
        if self.kind == "add":
            return " + ".join(
                str(c) if c.kind in ("var", "const", "min") else "(%s)" % c
                for c in self.args
            )
        a, b = self.args
        left = str(a) if a.kind in ("var", "const", "min", "add") else "(%s)" % a
        right = str(b) if b.kind in ("var", "const", "min") else "(%s)" % b
        return "%s - %s" % (left, right)

    def __repr__(self):
        return "TropExpr(%r, %r)" % (self.kind, self.args)


def _trop_of_poly(p):
    # one min-argument per monomial; positive coefficients tropicalize to 0
    nodes = []
    for mono in sorted(p.terms):
        if not mono:
            nodes.append(TropExpr.const(0))
            continue
        leaves = []
        for vid, exp in mono:
            leaves.extend([TropExpr.variable(vid)] * exp)
        nodes.append(TropExpr.add(*leaves))
    return TropExpr.minimum(*nodes)


def tropicalize(f):
    """Min-plus image of a subtraction-free rational expression."""
    if hasattr(f, "to_ratexpr"):
        f = f.to_ratexpr()
    f = as_ratexpr(f)
    if not f.subtraction_free:
        raise NotSubtractionFree(
            "tropicalization needs a subtraction-free numerator and denominator"
        )
    num = _trop_of_poly(f.num)
    if f.den.is_constant():
        return num
    return TropExpr.sub(num, _trop_of_poly(f.den))


def trop_eval(expr, point):
    """Evaluate a TropExpr at a point mapping VarId -> number."""
    return expr.eval(point)


# ---------------------------------------------------------------------------
# one-row tableaux and the combinatorial R-matrix


class OneRowTableau:
    """A weakly increasing row over the alphabet 1..n, stored as counts."""

    __slots__ = ("counts",)

    def __init__(self, counts):
        counts = tuple(int(c) for c in counts)
        if not counts:
            raise ValueError("alphabet must have at least one letter")
        if any(c < 0 for c in counts):
            raise ValueError("letter multiplicities must be nonnegative")
        self.counts = counts

    @classmethod
    def from_letters(cls, letters, n=None):
        letters = [int(a) for a in letters]
        if n is None:
            if not letters:
                raise ValueError("empty row needs an explicit alphabet size")
            n = max(letters)
        if any(not 1 <= a <= n for a in letters):
            raise ValueError("letters must lie in 1..%d" % n)
        counts = [0] * n
        for a in letters:
            counts[a - 1] += 1
        return cls(counts)

    @property
    def n(self):
        return len(self.counts)

    @property
    def length(self):
        return sum(self.counts)

    def letters(self):
        out = []
        for j, c in enumerate(self.counts, 1):
            out.extend([j] * c)
        return tuple(out)

    def __len__(self):
        return self.length

    def __iter__(self):
        return iter(self.letters())

    def __eq__(self, other):
        if not isinstance(other, OneRowTableau):
            return NotImplemented
        return self.counts == other.counts

    def __hash__(self):
        return hash(self.counts)

    def __str__(self):
        return "".join(str(a) for a in self.letters())

    def __repr__(self):
        return "OneRowTableau.from_letters(%r, n=%d)" % (list(self.letters()), self.n)


def _bar(v):
    # cyclic shift (v1,...,vn) -> (vn, v1, ..., v_{n-1})
    return (v[-1],) + tuple(v[:-1])


def _unbar(w):
    return tuple(w[1:]) + (w[0],)


def _trop_kappa(n, i, x, y):
    # min-plus kappa_i: min over j in [i, i+n-1] of the split y/x window sums
    best = None
    for j in range(i, i + n):
        tot = 0
        for k in range(i + 1, j + 1):
            tot += y[canon_color(k, n) - 1]
        for k in range(j + 1, i + n):
            tot += x[canon_color(k, n) - 1]
        if best is None or tot < best:
            best = tot
    return best


def _trop_swap(n, x, y):
    """Min-plus image of the birational swap on a pair of color tuples."""
    kap = [_trop_kappa(n, i, x, y) for i in range(1, n + 1)]

    def at(i):
        return kap[canon_color(i, n) - 1]

    x_out = tuple(
        y[canon_color(i + 1, n) - 1] + at(i + 1) - at(i) for i in range(1, n + 1)
    )
    y_out = tuple(
        x[canon_color(i - 1, n) - 1] + at(i - 1) - at(i) for i in range(1, n + 1)
    )
    return x_out, y_out


def comb_R_tropical(b1, b2):
    """Combinatorial R-matrix via the tropicalized swap.

    The first row's counts enter the swap directly; the second row's counts
    enter and leave through the cyclic bar shift.  Output lengths are the
    input lengths exchanged, and the combined letter multiset is preserved.
    """
    if b1.n != b2.n:
        raise ValueError("rows must share one alphabet")
    n = b1.n
    x_out, y_out = _trop_swap(n, b1.counts, _bar(b2.counts))
    if any(c < 0 for c in x_out + y_out):
        raise ValueError("swap produced negative multiplicities")
    return OneRowTableau(x_out), OneRowTableau(_unbar(y_out))


def comb_R_jdt(b1, b2):
    """Combinatorial R-matrix via jeu de taquin: the unique pair with swapped
    lengths and the same insertion tableau as word(b1) + word(b2)."""
    if b1.n != b2.n:
        raise ValueError("rows must share one alphabet")
    n = b1.n
    target = rsk_insert(b1.letters() + b2.letters())
    total = tuple(a + b for a, b in zip(b1.counts, b2.counts))
    want = len(b2)
    found = []
    for c1_counts in itertools.product(*(range(min(t, want) + 1) for t in total)):
        if sum(c1_counts) != want:
            continue
        c1 = OneRowTableau(c1_counts)
        c2 = OneRowTableau(tuple(t - c for t, c in zip(total, c1_counts)))
        if rsk_insert(c1.letters() + c2.letters()) == target:
            found.append((c1, c2))
    if len(found) != 1:
        raise SearchFailure(
            "expected a unique partner pair, found %d" % len(found)
        )
    return found[0]


def comb_R(b1, b2, method="tropical"):
    if method in ("tropical", "trop"):
        return comb_R_tropical(b1, b2)
    if method == "jdt":
        return comb_R_jdt(b1, b2)
    raise ValueError("method must be 'tropical' or 'jdt'")


# ---------------------------------------------------------------------------
# words, cocharge, highest-weight rows, energy


def word_from_string(text):
    """Digit string -> word, e.g. '3222311111233'."""
    word = tuple(int(ch) for ch in text.strip())
    if any(a < 1 for a in word):
        raise ValueError("letters must be at least 1")
    return word


def word_to_string(word):
    if any(not 1 <= a <= 9 for a in word):
        raise ValueError("digit rendering needs letters in 1..9")
    return "".join(str(a) for a in word)


def word_weight(word):
    """Letter multiplicities (#1s, #2s, ..., #max)."""
    if not word:
        return ()
    top = max(word)
    w = [0] * top
    for a in word:
        if a < 1:
            raise ValueError("letters must be at least 1")
        w[a - 1] += 1
    return tuple(w)


def _require_partition(weight, what):
    if any(weight[i] < weight[i + 1] for i in range(len(weight) - 1)):
        raise NonPartitionWeight("%s weight %r is not a partition" % (what, weight))
    if weight and weight[-1] == 0:
        raise NonPartitionWeight("%s weight %r is not a partition" % (what, weight))


def cocharge(word, rule="right"):
    """Cocharge by repeated extraction of underlined standard subwords.

    Each pass underlines the rightmost 1, then for each next letter the
    nearest occurrence to the left of the previous one (wrapping to the
    rightmost occurrence when none lies to the left).  The underlined letter
    inherits the previous index, incremented on the wrap side given by
    ``rule``: "right" increments when the letter was found to the right,
    "left" when it was found to the left.  Indices are summed over all
    passes; the underlined subword is removed and the procedure repeats.
    """
    if rule not in ("right", "left"):
        raise ValueError("rule must be 'right' or 'left'")
    w = [int(a) for a in word]
    if any(a < 1 for a in w):
        raise ValueError("letters must be at least 1")
    _require_partition(word_weight(w), "word")
    total = 0
    while w:
        top = max(w)
        pos = len(w) - 1 - w[::-1].index(1)
        chosen = {pos}
        idx = 0
        for letter in range(2, top + 1):
            left = [q for q in range(pos) if w[q] == letter]
            if left:
                pos = left[-1]
                wrapped = False
            else:
                pos = len(w) - 1 - w[::-1].index(letter)
                wrapped = True
            if (rule == "right") == wrapped:
                idx += 1
            total += idx
            chosen.add(pos)
        w = [a for t, a in enumerate(w) if t not in chosen]
    return total


def reading_word(tab):
    """Rows of a tableau read left to right, bottom row first."""
    return tuple(tab.reading_word())


def b_of_T(tab, n=None):
    """Split a partition-weight tableau into one-row tableaux: the i-th row
    records, letter by letter, which row of the tableau each i sits in."""
    weight = tab.weight()
    _require_partition(weight, "tableau")
    rows = tab.rows()
    if n is None:
        n = max(len(rows), 1)
    if n < len(rows):
        raise ValueError("alphabet too small for the tableau height")
    out = []
    for i in range(1, len(weight) + 1):
        counts = [rows[j].count(i) if j < len(rows) else 0 for j in range(n)]
        out.append(OneRowTableau(counts))
    return out


def _letter_row_counts(tab):
    counts = {}
    for j, row in enumerate(tab.rows(), 1):
        for a in row:
            counts[a, j] = counts.get((a, j), 0) + 1
    return counts


def energy_shape(n, m):
    """The staircase (n-1, n-2, ..., 1) scaled by m-1."""
    return Partition(tuple((m - 1) * (n - 1 - t) for t in range(n - 1)))


def energy_substitution(tab, n=None, convention="direct"):
    """The multiplicity tuples x_i = (x_i^(1), ..., x_i^(n)) substituted into
    the staircase minimization, one per site i = 1..m."""
    weight = tab.weight()
    _require_partition(weight, "tableau")
    m = len(weight)
    if n is None:
        n = m
    if convention not in ("direct", "reversed"):
        raise ValueError("convention must be 'direct' or 'reversed'")
    if not m <= n <= m + 1:
        raise ValueError(
            "energy needs m <= n <= m+1: the staircase has n-1 rows "
            "with entries at most m"
        )
    counts = _letter_row_counts(tab)
    rows = []
    for i in range(1, m + 1):
        letter = i if convention == "direct" else m + 1 - i
        rows.append(
            tuple(
                counts.get((letter, canon_color(j + 1 - i, n)), 0)
                for j in range(1, n + 1)
            )
        )
    return tuple(rows)


def energy_minimizers(tab, n=None, convention="direct"):
    """Energy value together with every minimizing staircase filling."""
    weight = tab.weight()
    _require_partition(weight, "tableau")
    m = len(weight)
    if n is None:
        n = m
    subs = energy_substitution(tab, n, convention)
    shape = energy_shape(n, m)
    best = None
    argmin = []
    for filling in ssyt_enumerate(shape, m):
        tot = 0
        for cell, entry in filling.entries.items():
            color = canon_color(content(cell), n)
            tot += subs[entry - 1][color - 1]
        if best is None or tot < best:
            best = tot
            argmin = [filling]
        elif tot == best:
            argmin.append(filling)
    if best is None:
        raise ValueError("no semistandard fillings of the energy shape")
    return best, tuple(argmin)


def energy(tab, n=None, convention="direct"):
    """Minimum of the substituted weight over staircase fillings."""
    return energy_minimizers(tab, n, convention)[0]
