"""Spin configurations, the local energy map and its fibers, the block
normal form of the spectrum, and the finite truncations with motifs.

A configuration is a finite prefix of letters 1..n followed by the periodic
tail (1, 2, ..., n) repeated forever.  The sector is the prefix length mod n.
A spectrum point is the block list [m_1,...,m_r] encoding the 0/1 sequence
(0^{m_1-1} 1, ..., 0^{m_r-1} 1, (0^{n-1} 1)^inf) with 1 <= m_i <= n and
m_r != n; the finite truncations additionally allow a final block equal to n
and are handled as plain block tuples.
"""
from __future__ import annotations

from fractions import Fraction

from .polyring import Ring, build_qseries
from .shapes import BorderStrip
from .tableaux import STANDARD, Tableau, strip_cell_order
from . import schur as _schur


def local_energy(a, b):
    """0 when the first letter is strictly lower, else 1."""
    return 0 if a < b else 1


class SpinConfiguration:
    """Eventually periodic letter sequence, stored as (prefix, rank)."""

    __slots__ = ("prefix", "n")

    def __init__(self, prefix, n):
        prefix = tuple(prefix)
        if any(not 1 <= a <= n for a in prefix):
            raise ValueError(f"letters must lie in 1..{n}")
        self.prefix = prefix
        self.n = n

    def sector(self):
        return len(self.prefix) % self.n

    def canonical(self):
        """Trim whole trailing periods (1, 2, ..., n) from the prefix."""
        period = tuple(range(1, self.n + 1))
        prefix = self.prefix
        while len(prefix) >= self.n and prefix[-self.n :] == period:
            prefix = prefix[: -self.n]
        if prefix is self.prefix:
            return self
        return SpinConfiguration(prefix, self.n)

    def letter(self, i):
        """The i-th letter (1-indexed), following the periodic tail."""
        if i <= len(self.prefix):
            return self.prefix[i - 1]
        return (i - len(self.prefix) - 1) % self.n + 1

    def __eq__(self, other):
        return (
            isinstance(other, SpinConfiguration)
            and self.n == other.n
            and self.canonical().prefix == other.canonical().prefix
        )

    def __hash__(self):
        return hash((self.canonical().prefix, self.n))

    def __repr__(self):
        return f"SpinConfiguration({self.prefix}, n={self.n})"


class SpectrumPoint:
    """Block normal form of an image of the local energy map."""

    __slots__ = ("blocks", "n")

    def __init__(self, blocks, n):
        blocks = tuple(blocks)
        if any(not 1 <= m <= n for m in blocks):
            raise ValueError(f"blocks must lie in 1..{n}")
        if blocks and blocks[-1] == n:
            raise ValueError("last block must differ from the rank")
        self.blocks = blocks
        self.n = n

    def sector(self):
        return sum(self.blocks) % self.n

    def size(self):
        return sum(self.blocks)

    def value(self, i):
        """The i-th local energy (1-indexed) of the encoded sequence."""
        m = self.size()
        if i <= m:
            psum = 0
            for b in self.blocks:
                psum += b
                if i == psum:
                    return 1
                if i < psum:
                    return 0
        return 1 if (i - m) % self.n == 0 else 0

    def __eq__(self, other):
        return (
            isinstance(other, SpectrumPoint)
            and self.blocks == other.blocks
            and self.n == other.n
        )

    def __hash__(self):
        return hash((self.blocks, self.n))

    def __repr__(self):
        return f"SpectrumPoint({list(self.blocks)}, n={self.n})"


def ground_energy_value(i, k, n):
    """The i-th local energy of the sector-k ground configuration."""
    return 1 if i % n == k % n else 0


def h_map(s):
    """Local energies of a configuration, in block normal form."""
    n = s.n
    m = len(s.prefix)
    ones = [
        i
        for i in range(1, m + 1)
        if local_energy(s.letter(i), s.letter(i + 1)) == 1
    ]
    ones.append(m + n)  # first tail one; all later blocks equal n
    blocks = []
    prev = 0
    for p in ones:
        blocks.append(p - prev)
        prev = p
    while blocks and blocks[-1] == n:
        blocks.pop()
    return SpectrumPoint(blocks, n)


def energy(s):
    """Finite sum of i * (local energy - ground local energy)."""
    n, k = s.n, s.sector()
    m = len(s.prefix)
    return sum(
        i * (local_energy(s.letter(i), s.letter(i + 1)) - ground_energy_value(i, k, n))
        for i in range(1, m + 1)
    )


def weight(s):
    """Doubled exponent vector of the canonical-prefix weight monomial."""
    vec = [0] * s.n
    for a in s.canonical().prefix:
        vec[a - 1] += 2
    return tuple(vec)


def kappa(h):
    """The finite border strip attached to a spectrum point."""
    return BorderStrip(h.blocks)


def phi(t, h):
    """Configuration read off a tableau of the realized strip shape."""
    shape = kappa(h).realize()
    if t.shape != shape or t.alphabet != STANDARD or t.n != h.n:
        raise ValueError("tableau shape does not match the spectrum point")
    prefix = [t.entries[c] for c in strip_cell_order(shape)]
    s = SpinConfiguration(prefix, h.n)
    if h_map(s) != h:
        raise AssertionError("reading violates the spectrum point")
    return s


def phi_inverse(s, h):
    """Tableau of shape kappa(h) whose strip reading gives the prefix."""
    if h_map(s) != h:
        raise ValueError("configuration is not in the fiber")
    m = h.size()
    prefix = list(s.canonical().prefix)
    while len(prefix) < m:
        prefix.extend(range(1, s.n + 1))
    if len(prefix) != m:
        raise ValueError("configuration is not in the fiber")
    shape = kappa(h).realize()
    entries = dict(zip(strip_cell_order(shape), prefix))
    return Tableau(shape, entries, STANDARD, s.n)


def enumerate_fiber(h):
    """Brute force over letter prefixes matching the local energies.

    Uses only the local energy function; the tableau machinery is never
    consulted, so this is an independent oracle for the bijection.
    """
    n = h.n
    m = h.size()
    target = [h.value(i) for i in range(1, m + 1)]

    def extend(prefix):
        i = len(prefix)
        if i == m:
            yield SpinConfiguration(prefix, n)
            return
        for a in range(1, n + 1):
            if prefix:
                if local_energy(prefix[-1], a) != target[i - 1]:
                    continue
            prefix.append(a)
            yield from extend(prefix)
            prefix.pop()

    def finishes(prefix):
        # the letter after the prefix is 1 (tail start)
        return local_energy(prefix[-1], 1) == target[m - 1]

    if m == 0:
        yield SpinConfiguration((), n)
        return
    for cand in extend([]):
        if finishes(list(cand.prefix)):
            yield cand


def fiber_character(h, relation=True):
    """Sum of weight monomials over the fiber."""
    ring = Ring(h.n, relation)
    return ring.from_terms((weight(s), 1) for s in enumerate_fiber(h))


def excitation_energy(blocks, n):
    """sum_i i*(h_i - ground_i) for a block list (final block n allowed)."""
    m = sum(blocks)
    k = m % n
    psums = set()
    acc = 0
    for b in blocks:
        acc += b
        psums.add(acc)
    return sum(
        i * ((1 if i in psums else 0) - ground_energy_value(i, k, n))
        for i in range(1, m + 1)
    )


def enumerate_Sp_N(N, n):
    """All block lists with entries in 1..n summing to N (final n allowed)."""
    if N == 0:
        yield ()
        return
    for first in range(1, min(n, N) + 1):
        for rest in enumerate_Sp_N(N - first, n):
            yield (first,) + rest


def motifs(N, n):
    """Binary words d_1..d_{N-1} with fewer than n consecutive ones."""
    def extend(word, run):
        if len(word) == N - 1:
            yield tuple(word)
            return
        word.append(0)
        yield from extend(word, 0)
        word.pop()
        if run + 1 < n:
            word.append(1)
            yield from extend(word, run + 1)
            word.pop()

    yield from extend([], 0)


def motif_to_blocks(d, n):
    """Translate a motif to its block list via h_i = 1 - d_i, h_N = 1."""
    N = len(d) + 1
    run = 0
    for bit in d:
        if bit not in (0, 1):
            raise ValueError("motif entries must be 0 or 1")
        run = run + 1 if bit else 0
        if run >= n:
            raise ValueError(f"motif has {n} consecutive ones")
    ones = [i for i, bit in enumerate(d, start=1) if bit == 0]
    ones.append(N)
    blocks = []
    prev = 0
    for p in ones:
        blocks.append(p - prev)
        prev = p
    return tuple(blocks)


def hs_eigenvalue(d, N=None):
    """sum_i i * d_i * (i * d_i - N) over the motif word."""
    if N is None:
        N = len(d) + 1
    return sum(i * b * (i * b - N) for i, b in enumerate(d, start=1))


def motif_excitation(d, n):
    """-sum_i i*d_i plus the ground constant: the excitation carried by
    every configuration in the motif's fiber (the inverse-square model's
    grading, distinct from the trigonometric eigenvalue above)."""
    N = len(d) + 1
    return -sum(i * b for i, b in enumerate(d, start=1)) + polychronakos_ground_energy(N, n)


def polychronakos_ground_energy(N, n):
    """The normalizing constant making the lowest excitation zero."""
    Nbar = N % n
    e = Fraction((n - 1) * N * N, 2 * n) - Fraction(Nbar * (n - Nbar), 2 * n)
    if e.denominator != 1:
        raise AssertionError("ground energy is not an integer")
    return int(e)


def Z_vertex(N, n, relation=False):
    """Partition function of the length-N truncation, summed over blocks.

    Each block list contributes q^(excitation) times the Schur function of
    the size-N strip read off the blocks (a final block n keeps its column).
    """
    ring = Ring(n, relation)
    order = polychronakos_ground_energy(N, n)
    return build_qseries(
        ring,
        0,
        order,
        (
            (
                excitation_energy(blocks, n),
                _schur.schur_strip_cached(blocks, n, relation),
            )
            for blocks in enumerate_Sp_N(N, n)
        ),
    )


def Z_vertex_direct(N, n, relation=False):
    """Same partition function summed configuration by configuration."""
    ring = Ring(n, relation)
    order = polychronakos_ground_energy(N, n)

    def contributions():
        def extend(prefix):
            if len(prefix) == N:
                s = SpinConfiguration(prefix, n)
                vec = [0] * n
                for a in prefix:
                    vec[a - 1] += 2
                yield energy(s), ring.monomial(tuple(vec))
                return
            for a in range(1, n + 1):
                prefix.append(a)
                yield from extend(prefix)
                prefix.pop()

        yield from extend([])

    return build_qseries(ring, 0, order, contributions())
