"""Tableau enumeration: semi-standard, lattice-permutation, GZ schemes,
and the signed-alphabet admissible fillings.

Standard fillings use letters 1..n with columns strictly increasing downward
and rows weakly increasing to the right.  Signed fillings use the ordered
alphabet 1 < ... < n < 0 < -n < ... < -1 with the same shape of rules except
that a vertical (0,0) pair is allowed and a horizontal (0,0) pair is not.
Enumeration is a lazy cell-by-cell backtracking in row-major order, so both
neighbours of a cell are already placed when it is tried.
"""
from __future__ import annotations

from collections import Counter

from .shapes import Partition, SkewDiagram


STANDARD = "standard"
SIGNED = "signed"


def signed_alphabet(n):
    """The letters 1..n, 0, -n..-1 in increasing order."""
    return list(range(1, n + 1)) + [0] + list(range(-n, 0))


def signed_pos(a, n):
    """Position of a letter in the signed order (1-indexed)."""
    if 1 <= a <= n:
        return a
    if a == 0:
        return n + 1
    if -n <= a <= -1:
        return 2 * n + 2 + a
    raise ValueError(f"letter {a} outside signed alphabet of rank {n}")


class Tableau:
    """A filling of a skew diagram.

    ``entries`` maps (row, col) cells to letters.  ``frozen`` marks cells
    whose letters carry half weight (the pinned tail of a signed filling);
    it is empty for standard tableaux.
    """

    __slots__ = ("shape", "entries", "alphabet", "n", "frozen")

    def __init__(self, shape, entries, alphabet, n, frozen=frozenset()):
        self.shape = shape
        self.entries = dict(entries)
        self.alphabet = alphabet
        self.n = n
        self.frozen = frozenset(frozen)
        if set(self.entries) != set(shape.cells()):
            raise ValueError("entries do not cover the shape")

    def content(self):
        return Counter(self.entries.values())

    def reading_word(self):
        """Entries along the strip order: right to left, top to bottom."""
        return [self.entries[c] for c in strip_cell_order(self.shape)]

    def rows(self):
        """Per-row entry lists, left to right (inner cells omitted)."""
        out = []
        for i in range(1, self.shape.outer.length() + 1):
            row = [
                self.entries[(i, j)]
                for j in range(self.shape.inner.part(i) + 1, self.shape.outer.part(i) + 1)
            ]
            out.append(row)
        return out

    def key(self):
        return (self.shape.outer, self.shape.inner, tuple(sorted(self.entries.items())))

    def __eq__(self, other):
        return isinstance(other, Tableau) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Tableau({self.shape}, {self.rows()})"


def strip_cell_order(shape):
    """Total order on cells: columns right to left, top to bottom inside."""
    return sorted(shape.cells(), key=lambda rc: (-rc[1], rc[0]))


def _pair_ok_standard(n):
    def vertical(a, b):  # a above b
        return a < b

    def horizontal(left, right):
        return right >= left

    return vertical, horizontal


def _pair_ok_signed(n):
    def vertical(a, b):
        if a == 0 and b == 0:
            return True
        return signed_pos(a, n) < signed_pos(b, n)

    def horizontal(left, right):
        if left == 0 and right == 0:
            return False
        return signed_pos(right, n) >= signed_pos(left, n)

    return vertical, horizontal


def _enumerate(shape, n, alphabet, pinned=None):
    """Backtracking generator over valid fillings.

    ``pinned`` maps cells to forced letters; forced cells still undergo the
    adjacency checks so an impossible pin yields an empty stream.
    """
    cells = sorted(shape.cells())
    if alphabet == STANDARD:
        letters = list(range(1, n + 1))
        vertical, horizontal = _pair_ok_standard(n)
    else:
        letters = signed_alphabet(n)
        vertical, horizontal = _pair_ok_signed(n)
    pinned = pinned or {}
    cellset = set(cells)
    entries = {}

    def fill(idx):
        if idx == len(cells):
            yield Tableau(shape, entries, alphabet, n, frozenset(pinned))
            return
        cell = cells[idx]
        r, c = cell
        above = entries.get((r - 1, c)) if (r - 1, c) in cellset else None
        left = entries.get((r, c - 1)) if (r, c - 1) in cellset else None
        candidates = (pinned[cell],) if cell in pinned else letters
        for a in candidates:
            if above is not None and not vertical(above, a):
                continue
            if left is not None and not horizontal(left, a):
                continue
            entries[cell] = a
            yield from fill(idx + 1)
            del entries[cell]

    return fill(0)


def enumerate_sst(shape, n):
    """All semi-standard fillings over 1..n, lazily, each exactly once."""
    return _enumerate(shape, n, STANDARD)


def enumerate_admissible(shape, n):
    """All signed-alphabet admissible fillings, lazily."""
    return _enumerate(shape, n, SIGNED)


def enumerate_L_admissible(bs, n):
    """Admissible fillings of a strip whose last column (length 2n) has its
    bottom n cells pinned to -n, -n+1, ..., -1 with half weight."""
    if not bs.columns or bs.columns[-1] != 2 * n:
        raise ValueError(f"last column of {bs} must have length {2 * n}")
    shape = bs.realize()
    lamc = shape.outer.conjugate()
    muc = shape.inner.conjugate()
    top = muc.part(1) + 1
    bottom = lamc.part(1)
    if bottom - top + 1 != 2 * n:
        raise AssertionError("leftmost column length disagrees with strip data")
    pinned = {
        (top + n + i, 1): -n + i
        for i in range(n)
    }
    return _enumerate(shape, n, SIGNED, pinned=pinned)


def tableau_weight(t):
    """Doubled exponent vector of the filling's weight monomial.

    Standard letters a contribute the a-th unit; signed letters +/-i
    contribute +/- the i-th unit and 0 contributes nothing.  Frozen cells
    contribute half of that.
    """
    n = t.n
    vec = [0] * n
    for cell, a in t.entries.items():
        half = cell in t.frozen
        if t.alphabet == STANDARD:
            vec[a - 1] += 1 if half else 2
        else:
            if a == 0:
                continue
            i = abs(a) - 1
            step = 1 if half else 2
            vec[i] += step if a > 0 else -step
    return tuple(vec)


def is_lattice_permutation(t):
    """Every prefix of the strip reading word has #a >= #(a+1) for all a."""
    if t.alphabet != STANDARD:
        raise ValueError("lattice reading is defined for standard fillings")
    counts = Counter()
    for a in t.reading_word():
        counts[a] += 1
        if a > 1 and counts[a] > counts[a - 1]:
            return False
    return True


def count_LR(bs, content):
    """Number of lattice-permutation fillings of the strip with the given
    content partition; zero when the sizes disagree."""
    if not isinstance(content, Partition):
        content = Partition(content)
    if bs.size() != content.size():
        return 0
    if bs.size() == 0:
        return 1
    want = Counter({i: p for i, p in enumerate(content.parts, start=1) if p})
    total = 0
    for t in enumerate_sst(bs.realize(), max(content.length(), 1)):
        if t.content() == want and is_lattice_permutation(t):
            total += 1
    return total


def kostka_number(shape, content):
    """Number of straight-shape semi-standard fillings with given content."""
    if not isinstance(shape, Partition):
        shape = Partition(shape)
    if not isinstance(content, Partition):
        content = Partition(content)
    if shape.size() != content.size():
        return 0
    if shape.size() == 0:
        return 1
    want = Counter({i: p for i, p in enumerate(content.parts, start=1) if p})
    sd = SkewDiagram(shape, Partition())
    return sum(
        1 for t in enumerate_sst(sd, max(content.length(), 1)) if t.content() == want
    )


class GZScheme:
    """A chain of n+1 nested partitions with the interlacing property."""

    __slots__ = ("rows", "N")

    def __init__(self, rows, N):
        rows = tuple(
            r if isinstance(r, Partition) else Partition(r) for r in rows
        )
        self.rows = rows
        self.N = N
        for m, row in enumerate(rows):
            if row.length() > N + m:
                raise ValueError(f"row {m} longer than {N + m}")
        for m in range(1, len(rows)):
            hi, lo = rows[m], rows[m - 1]
            width = max(hi.length(), lo.length()) + 1
            for i in range(1, width + 1):
                if not (hi.part(i) >= lo.part(i) >= hi.part(i + 1)):
                    raise ValueError(
                        f"interlacing fails between rows {m - 1} and {m} at {i}"
                    )

    def weight(self):
        """Doubled exponent vector: row-size increments feed slots 1..n."""
        vec = []
        for m in range(1, len(self.rows)):
            vec.append(2 * (self.rows[m].size() - self.rows[m - 1].size()))
        return tuple(vec)

    def __eq__(self, other):
        return isinstance(other, GZScheme) and self.rows == other.rows and self.N == other.N

    def __hash__(self):
        return hash((self.rows, self.N))

    def __repr__(self):
        return f"GZScheme({[tuple(r) for r in self.rows]}, N={self.N})"


def tableau_to_json(t):
    """{"shape": "outer/inner", "rows": [[letters...], ...]}."""
    return {"shape": str(t.shape), "rows": t.rows()}


def tableau_from_json(doc, alphabet, n, frozen=frozenset()):
    shape = SkewDiagram.from_str(doc["shape"])
    entries = {}
    for i, row in enumerate(doc["rows"], start=1):
        start = shape.inner.part(i)
        for off, letter in enumerate(row, start=1):
            entries[(i, start + off)] = letter
    return Tableau(shape, entries, alphabet, n, frozen)


def gz_from_sst(t, N):
    """Scheme whose m-th row collects the inner shape plus all cells <= m."""
    if t.alphabet != STANDARD:
        raise ValueError("schemes correspond to standard fillings")
    if t.shape.inner.length() > N:
        raise ValueError(f"inner shape longer than N={N}")
    rows = []
    nrows = t.shape.outer.length()
    for m in range(t.n + 1):
        parts = [
            t.shape.inner.part(i)
            + sum(1 for (r, _c), a in t.entries.items() if r == i and a <= m)
            for i in range(1, nrows + 1)
        ]
        rows.append(Partition(parts))
    return GZScheme(rows, N)


def sst_from_gz(g):
    """Inverse construction: inscribe m on the m-th skew layer."""
    n = len(g.rows) - 1
    shape = SkewDiagram(g.rows[-1], g.rows[0])
    entries = {}
    for m in range(1, n + 1):
        layer = SkewDiagram(g.rows[m], g.rows[m - 1])
        for cell in layer.cells():
            entries[cell] = m
    return Tableau(shape, entries, STANDARD, n)
