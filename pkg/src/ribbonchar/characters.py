"""q-series assembly: multinomial generating polynomials, the border-strip
sum that equals them, lattice theta forms versus strip decompositions of the
level-1 characters, and the strip formula for Kostka-Foulkes polynomials
with its independent extraction oracle."""
from __future__ import annotations

from fractions import Fraction
from itertools import product

from .polyring import (
    QPoly,
    Ring,
    build_qseries,
    gaussian_multinomial,
    inverse_pochhammer_series,
)
from .shapes import BorderStrip, Partition, partitions_of, t_statistic
from .spectra import enumerate_Sp_N, excitation_energy, polychronakos_ground_energy
from .tableaux import count_LR, kostka_number
from . import schur as _schur


def _compositions(total, parts):
    """All tuples of ``parts`` nonnegative integers summing to ``total``."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


_GM_CACHE = {}


def _gm(N, parts):
    key = (N, tuple(sorted(parts)))
    got = _GM_CACHE.get(key)
    if got is None:
        got = _GM_CACHE[key] = gaussian_multinomial(N, key[1])
    return got


def rogers_szego(N, n):
    """Sum over compositions of N of the q-multinomial times the monomial."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    ring = Ring(n, relation=False)
    return ring.from_terms(
        (tuple(2 * k for k in comp), _gm(N, comp))
        for comp in _compositions(N, n)
    )


_RSZ_REC_CACHE = {}


def rogers_szego_recursive(N, n):
    """The same polynomials built purely from their recursion.

    H_N = sum_{i=1..n} (-1)^(i+1) * prod_{j=N-i+1}^{N-1}(1-q^j) * e_i * H_{N-i}
    with H_0 = 1 and H_{<0} = 0; the prefactor is the exact quotient of
    q-factorials, expanded as a product.
    """
    key = (N, n)
    got = _RSZ_REC_CACHE.get(key)
    if got is not None:
        return got
    ring = Ring(n, relation=False)
    if N == 0:
        out = ring.one()
    else:
        out = ring.zero()
        for i in range(1, n + 1):
            if i > N:
                break
            pref = QPoly.const(1)
            for j in range(N - i + 1, N):
                pref = pref * QPoly({0: 1, j: -1})
            term = _schur.e_m(ring, i) * rogers_szego_recursive(N - i, n) * pref
            out = out + (term if i % 2 == 1 else -term)
    _RSZ_REC_CACHE[key] = out
    return out


def F_N(N, n):
    """Strip sum: q^(N(N+1)/2 - sum of prefix sums) times each strip Schur."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    ring = Ring(n, relation=False)
    out = ring.zero()
    base = N * (N + 1) // 2
    for blocks in enumerate_Sp_N(N, n):
        acc = 0
        psum = 0
        for m in blocks:
            psum += m
            acc += psum
        out = out + _schur.schur_strip_cached(blocks, n) * QPoly.term(base - acc)
    return out


def _ordered_partitions(m, bound=None):
    """All ordered tuples of positive parts summing to m."""
    if m == 0:
        yield ()
        return
    top = m if bound is None else min(bound, m)
    for first in range(1, top + 1):
        for rest in _ordered_partitions(m - first, bound):
            yield (first,) + rest


def _a_exponent(N, m, ks):
    j = len(ks)
    return N * (m - j) - m * (m + 1) // 2 + sum(i * k for i, k in enumerate(ks, 1))


def A_coefficient(N, m, n=None):
    """Signed sum over ordered partitions of m (parts <= n when given)."""
    if not 1 <= m <= N:
        raise ValueError("need 1 <= m <= N")
    out = QPoly()
    for ks in _ordered_partitions(m, bound=n):
        term = QPoly.term(_a_exponent(N, m, ks))
        out = out + (term if len(ks) % 2 == 1 else -term)
    return out


def A_closed(N, m):
    """(-1)^(m+1) (q)_{N-1} / (q)_{N-m}, expanded as a plain product."""
    if not 1 <= m <= N:
        raise ValueError("need 1 <= m <= N")
    out = QPoly.const(1)
    for i in range(N - m + 1, N):
        out = out * QPoly({0: 1, i: -1})
    return out if m % 2 == 1 else -out


def A_split_contributions(N, m):
    """The two sub-sums over ordered partitions ending in 1 versus >= 2."""
    ending_one = QPoly()
    bumped = QPoly()
    for ks in _ordered_partitions(m):
        term = QPoly.term(_a_exponent(N, m, ks))
        signed = term if len(ks) % 2 == 1 else -term
        if ks[-1] == 1:
            ending_one = ending_one + signed
        else:
            bumped = bumped + signed
    return ending_one, bumped


def conformal_dimension(n, k):
    return Fraction(k * (n - k), 2 * n)


# ---------------------------------------------------------------------------
# Strip enumeration for the level-1 decomposition.
#
# A strip with columns (m_1..m_r), prefix sums p_j and size m contributes at
# exponent f = m(n-m)/(2n) + sum_{j<r} p_j.  Walking back from p_r = m with
# the last column at most n-1 and interior columns at most n gives
#     p_j >= max(j, m - (n-1) - (r-1-j)*n),
# so f >= lb(m, r) := m(n-m)/(2n) + sum_j max(...).  For fixed r the size m
# is at most r*n - 1, and lb grows without bound in r (the densest strips
# have lb ~ r), so scanning r until lb exceeds the cutoff for several
# consecutive values terminates and provably covers the window; the margin
# is rechecked by tests that enlarge the box.
# ---------------------------------------------------------------------------


def _strip_lb(m, r, n):
    tail = sum(
        max(j, m - (n - 1) - (r - 1 - j) * n) for j in range(1, r)
    )
    return Fraction(m * (n - m), 2 * n) + tail


def decomposition_strips(n, cutoff, extra_columns=2):
    """Yield (blocks, exponent) for every strip with exponent <= cutoff.

    Strips have columns in 1..n with the final column at most n-1; the
    empty strip contributes exponent 0.
    """
    cutoff = Fraction(cutoff)
    if cutoff >= 0:
        yield (), Fraction(0)
    r = 1
    misses = 0
    while misses <= extra_columns:
        feasible = [
            m for m in range(r, r * n) if _strip_lb(m, r, n) <= cutoff
        ]
        if not feasible:
            misses += 1
            r += 1
            continue
        misses = 0
        for blocks in product(*([range(1, n + 1)] * (r - 1) + [range(1, n)])):
            m = sum(blocks)
            acc = 0
            psum = 0
            for b in blocks[:-1]:
                psum += b
                acc += psum
            f = Fraction(m * (n - m), 2 * n) + acc
            if f <= cutoff:
                yield blocks, f
        r += 1


def level1_decomposition(n, k, order, variant="a"):
    """Strip-sum form of the sector-k character, offset by the conformal
    dimension; variant "b" runs over the complementary sector with the
    variable-inverted Schur functions."""
    if not 0 <= k < n:
        raise ValueError("sector out of range")
    if variant not in ("a", "b"):
        raise ValueError("variant must be 'a' or 'b'")
    ring = Ring(n, relation=True)
    delta = conformal_dimension(n, k)
    cutoff = delta + order
    residue = k % n if variant == "a" else (n - k) % n

    def contributions():
        for blocks, expo in decomposition_strips(n, cutoff):
            if sum(blocks) % n != residue:
                continue
            val = _schur.schur_strip_cached(blocks, n, relation=True)
            if variant == "b":
                val = val.subs_x_inverse()
            yield expo, val

    return build_qseries(ring, delta, order, contributions(), drop_above=True)


def level1_theta(n, k, order):
    """Lattice-sum form of the sector-k character.

    Weight classes are enumerated by integer vectors with minimum entry 0
    and coordinate sum congruent to k mod n; such a vector a sits at
    exponent (sum a_i^2 - (sum a_i)^2 / n) / 2 and the variance bound
    confines the search to a finite box.  The result carries the
    inverse-q-factorial denominator to the requested order.
    """
    if not 0 <= k < n:
        raise ValueError("sector out of range")
    ring = Ring(n, relation=True)
    delta = conformal_dimension(n, k)
    cutoff = delta + order
    box = int((2 * float(cutoff)) ** 0.5 * 2) + 2

    def contributions():
        for a in product(range(box + 1), repeat=n):
            if min(a) != 0:
                continue
            s = sum(a)
            if s % n != k % n:
                continue
            expo = Fraction(sum(x * x for x in a), 2) - Fraction(s * s, 2 * n)
            if expo <= cutoff:
                yield expo, ring.monomial(tuple(2 * x for x in a))

    numerator = build_qseries(ring, delta, order, contributions(), drop_above=True)
    return numerator * inverse_pochhammer_series(ring, n - 1, order)


def polychronakos_partition(N, n, relation=False):
    """q^(ground energy) times the reversed-q multinomial polynomial."""
    ring = Ring(n, relation)
    e0 = polychronakos_ground_energy(N, n)
    flipped = rogers_szego(N, n).to_ring(ring).subs_q_inverse()
    return build_qseries(
        ring,
        0,
        e0,
        ((e + e0, part) for e, part in flipped.q_split().items()),
    )


def polychronakos_strip_form(N, n, relation=False):
    """The same partition function as a strip sum over block lists."""
    ring = Ring(n, relation)
    e0 = polychronakos_ground_energy(N, n)
    return build_qseries(
        ring,
        0,
        e0,
        (
            (excitation_energy(blocks, n), _schur.schur_strip_cached(blocks, n, relation))
            for blocks in enumerate_Sp_N(N, n)
        ),
    )


class KostkaResult:
    """Strip-sum value of a Kostka-Foulkes polynomial with its audit list."""

    __slots__ = ("lam", "polynomial", "strips")

    def __init__(self, lam, polynomial, strips):
        self.lam = lam
        self.polynomial = polynomial
        self.strips = tuple(strips)
        check = QPoly()
        for _bs, t, c in self.strips:
            check = check + QPoly.term(t, c)
        if check != polynomial:
            raise AssertionError("strip audit list disagrees with polynomial")

    def __repr__(self):
        return f"KostkaResult({self.lam}, {self.polynomial})"


def kostka_foulkes(lam, n=None):
    """Sum of q^t(strip) times the lattice-filling count, over all strips
    of the size of lam with columns bounded by n.

    Single-column strips carry statistic 0; the convention is pinned by the
    extraction oracle and by the q-multinomial identity behind it.
    """
    if not isinstance(lam, Partition):
        lam = Partition(lam)
    if n is None:
        n = max(lam.length(), 1)
    strips = []
    poly = QPoly()
    for blocks in enumerate_Sp_N(lam.size(), n):
        bs = BorderStrip(blocks)
        c = count_LR(bs, lam)
        if c:
            t = t_statistic(bs)
            strips.append((bs, t, c))
            poly = poly + QPoly.term(t, c)
    return KostkaResult(lam, poly, strips)


def kostka_rhs(N, n):
    """sum over n-part compositions of q^(sum k_i(k_i-1)/2) [N; k]_q x^k."""
    ring = Ring(n, relation=False)
    return ring.from_terms(
        (
            tuple(2 * k for k in comp),
            _gm(N, comp).shifted(sum(k * (k - 1) // 2 for k in comp)),
        )
        for comp in _compositions(N, n)
    )


def kostka_oracle(lam, n=None):
    """Kostka-Foulkes value extracted from the q-multinomial expansion.

    Processing partitions in lexicographically decreasing order (which
    refines dominance), peel with classical tableau-counted Kostka numbers:
        K_rhs(lam) = coeff_{x^lam}(rhs) - sum_{mu > lam} K_rhs(mu) K(mu, lam).
    Nothing here touches the strip formula.
    """
    if not isinstance(lam, Partition):
        lam = Partition(lam)
    n = max(lam.length(), 1) if n is None else n
    if lam.length() > n:
        return QPoly()
    N = lam.size()
    rhs = kostka_rhs(N, n)
    shapes = sorted(partitions_of(N, max_length=n), reverse=True)
    extracted = {}
    for mu in shapes:
        vec = tuple(2 * mu.part(i) for i in range(1, n + 1))
        val = rhs.coeff(vec)
        for nu, knu in extracted.items():
            count = kostka_number(nu, mu)
            if count:
                val = val - knu * count
        extracted[mu] = val
        if mu == lam:
            return val
    return extracted.get(lam, QPoly())


def branching_function(k, lam, n, order):
    """Multiplicity series of a highest-weight shape inside the sector-k
    strip decomposition: strips of matching residue and size at least
    the shape's, counted with padded content."""
    if not isinstance(lam, Partition):
        lam = Partition(lam)
    if lam.length() >= n:
        raise ValueError("shape must have fewer than n rows")
    if lam.size() % n != k % n:
        raise ValueError("shape size incompatible with the sector")
    ring = Ring(n, relation=True)
    delta = conformal_dimension(n, k)
    cutoff = delta + order
    one = (0,) * n

    def contributions():
        for blocks, expo in decomposition_strips(n, cutoff):
            m = sum(blocks)
            if m % n != k % n or m < lam.size():
                continue
            j = (m - lam.size()) // n
            content = lam.padded(n, add=j)
            c = count_LR(BorderStrip(blocks), content)
            if c:
                yield expo, ring.monomial(one, c)

    return build_qseries(ring, delta, order, contributions(), drop_above=True)
