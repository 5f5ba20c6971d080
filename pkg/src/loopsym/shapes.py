"""Partitions, skew shapes, semistandard tableaux, ribbons, and row
insertion.  English notation throughout: row 1 is the top row, and cell
(i, j) means row i, column j, both 1-indexed."""

from __future__ import annotations

from itertools import count


class Partition:
    """Weakly decreasing nonnegative parts; trailing zeros are dropped."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError("parts must be weakly decreasing: %r" % (parts,))
        if parts and parts[-1] < 0:
            raise ValueError("parts must be nonnegative: %r" % (parts,))
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        self.parts = parts

    def part(self, i):
        # 1-indexed, zero past the last row
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, (tuple, list)):
            return self == Partition(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return "Partition(%r)" % (self.parts,)

    @property
    def size(self):
        return sum(self.parts)

    def contains(self, other):
        other = aspartition(other)
        return all(self.part(i) >= other.part(i) for i in range(1, len(other) + 1))

    def conjugate(self):
        if not self.parts:
            return Partition()
        return Partition(
            sum(1 for p in self.parts if p >= j) for j in range(1, self.parts[0] + 1)
        )

    def cells(self):
        return [(i, j) for i, p in enumerate(self.parts, 1) for j in range(1, p + 1)]


def aspartition(obj):
    return obj if isinstance(obj, Partition) else Partition(obj)


def staircase(m):
    """The staircase (m, m-1, ..., 1)."""
    return Partition(range(m, 0, -1))


def partitions_of(n, max_part=None):
    """All partitions of n, parts bounded by max_part, largest part first."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + rest.parts)


def partitions_in_box(rows, cols):
    """All partitions with at most `rows` parts, each at most `cols`."""
    def rec(r, bound):
        yield ()
        if r == 0:
            return
        for p in range(1, bound + 1):
            for rest in rec(r - 1, p):
                yield (p,) + rest
    for parts in rec(rows, cols):
        yield Partition(parts)


class SkewShape:
    """outer/inner pair of partitions with inner contained in outer."""

    __slots__ = ("outer", "inner")

    def __init__(self, outer, inner=()):
        self.outer = aspartition(outer)
        self.inner = aspartition(inner)
        if not self.outer.contains(self.inner):
            raise ValueError("inner shape not contained in outer")

    def cells(self):
        return [
            (i, j)
            for i, p in enumerate(self.outer.parts, 1)
            for j in range(self.inner.part(i) + 1, p + 1)
        ]

    @property
    def size(self):
        return self.outer.size - self.inner.size

    def is_straight(self):
        return not self.inner.parts

    def __contains__(self, cell):
        i, j = cell
        return 1 <= i <= len(self.outer) and self.inner.part(i) < j <= self.outer.part(i)

    def __eq__(self, other):
        if not isinstance(other, SkewShape):
            return NotImplemented
        return self.outer == other.outer and self.inner == other.inner

    def __hash__(self):
        return hash((self.outer, self.inner))

    def __repr__(self):
        if self.is_straight():
            return "SkewShape(%r)" % (self.outer.parts,)
        return "SkewShape(%r, %r)" % (self.outer.parts, self.inner.parts)


def asshape(obj):
    if isinstance(obj, SkewShape):
        return obj
    return SkewShape(aspartition(obj))


class Tableau:
    """Filling of a skew shape: rows weakly increase, columns strictly."""

    __slots__ = ("shape", "entries")

    def __init__(self, shape, entries, validate=True):
        self.shape = asshape(shape)
        self.entries = dict(entries)
        if validate:
            self._check()

    def _check(self):
        cells = self.shape.cells()
        if set(self.entries) != set(cells):
            raise ValueError("entries do not match the shape")
        for (i, j), v in self.entries.items():
            if not (isinstance(v, int) and v >= 1):
                raise ValueError("entries must be positive integers")
            left = self.entries.get((i, j - 1))
            if left is not None and left > v:
                raise ValueError("row %d not weakly increasing" % i)
            up = self.entries.get((i - 1, j))
            if up is not None and up >= v:
                raise ValueError("column %d not strictly increasing" % j)

    @classmethod
    def from_rows(cls, rows, inner=(), validate=True):
        """rows list the entries outside the inner shape, row by row."""
        inner = aspartition(inner)
        outer = Partition(
            tuple(inner.part(i) + len(r) for i, r in enumerate(rows, 1))
        )
        entries = {
            (i, inner.part(i) + j): v
            for i, r in enumerate(rows, 1)
            for j, v in enumerate(r, 1)
        }
        return cls(SkewShape(outer, inner), entries, validate=validate)

    def rows(self):
        """Entry lists per row, cells inside the inner shape omitted."""
        out = []
        for i, p in enumerate(self.shape.outer.parts, 1):
            out.append(
                [self.entries[(i, j)] for j in range(self.shape.inner.part(i) + 1, p + 1)]
            )
        return out

    def reading_word(self):
        """Rows read left to right, bottom row first."""
        word = []
        for row in reversed(self.rows()):
            word.extend(row)
        return tuple(word)

    def weight(self):
        """Multiplicities (#1s, #2s, ..., #max)."""
        if not self.entries:
            return ()
        top = max(self.entries.values())
        w = [0] * top
        for v in self.entries.values():
            w[v - 1] += 1
        return tuple(w)

    def max_entry(self):
        return max(self.entries.values(), default=0)

    def __eq__(self, other):
        if not isinstance(other, Tableau):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.shape, tuple(sorted(self.entries.items()))))

    def __repr__(self):
        return "Tableau.from_rows(%r, inner=%r)" % (
            self.rows(),
            self.shape.inner.parts,
        )


def content(cell):
    # row minus column, the reverse of the usual sign convention
    i, j = cell
    return i - j


def ssyt_enumerate(shape, max_entry):
    """Yield every semistandard filling of the shape with entries <= max_entry."""
    shape = asshape(shape)
    cells = shape.cells()
    if max_entry <= 0 and cells:
        return
    filling = {}

    def fill(k):
        if k == len(cells):
            yield Tableau(shape, dict(filling), validate=False)
            return
        i, j = cells[k]
        lo = 1
        left = filling.get((i, j - 1))
        if left is not None:
            lo = max(lo, left)
        up = filling.get((i - 1, j))
        if up is not None:
            lo = max(lo, up + 1)
        for v in range(lo, max_entry + 1):
            filling[(i, j)] = v
            yield from fill(k + 1)
        filling.pop((i, j), None)

    yield from fill(0)


def is_ribbon(outer, inner):
    """Connected skew shape containing no 2x2 block of cells."""
    cells = set(SkewShape(outer, inner).cells())
    if not cells:
        return False
    for i, j in cells:
        if {(i, j + 1), (i + 1, j), (i + 1, j + 1)} <= cells:
            return False
    seen = {next(iter(cells))}
    frontier = list(seen)
    while frontier:
        i, j = frontier.pop()
        for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                frontier.append(nb)
    return seen == cells


def ribbon_height(outer, inner):
    """Number of rows the ribbon occupies, minus 1."""
    rows = {i for i, _ in SkewShape(outer, inner).cells()}
    return len(rows) - 1


def add_ribbons(lam, size):
    """All (mu, height) with mu containing lam and mu/lam a ribbon of the size."""
    lam = aspartition(lam)
    out = []
    for mu in partitions_of(lam.size + size):
        if mu.contains(lam) and is_ribbon(mu, lam):
            out.append((mu, ribbon_height(mu, lam)))
    return out


def rsk_insert(word):
    """Insertion tableau of a word, by Schensted row insertion."""
    rows = []
    for letter in word:
        x = letter
        for row in rows:
            if not row or row[-1] <= x:
                row.append(x)
                x = None
                break
            k = next(i for i, y in enumerate(row) if y > x)
            row[k], x = x, row[k]
        if x is not None:
            rows.append([x])
    return Tableau.from_rows(rows, validate=False)


def rectify(tab):
    """Rectification of a skew tableau (via insertion of its reading word)."""
    return rsk_insert(tab.reading_word())
