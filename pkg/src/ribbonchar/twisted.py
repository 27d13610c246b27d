"""The signed-alphabet vertex model: twisted local energy, its spectral
decomposition through pinned-column strips, the character by enumeration,
by fiber brute force and by the sigma/t determinant, and the level-1
lattice form versus the strip decomposition."""
from __future__ import annotations

from itertools import product

from .polyring import (
    Ring,
    build_qseries,
    determinant,
    elementary_symmetric,
    inverse_pochhammer_series,
)
from .shapes import BorderStrip
from .tableaux import (
    enumerate_L_admissible,
    signed_alphabet,
    signed_pos,
    tableau_weight,
)


def local_energy_twisted(a, b, n):
    """0 when a precedes b in the signed order or both letters vanish."""
    if a == 0 and b == 0:
        return 0
    return 0 if signed_pos(a, n) < signed_pos(b, n) else 1


class TwistedConfiguration:
    """Finite prefix over the signed alphabet, followed by zeros."""

    __slots__ = ("prefix", "n")

    def __init__(self, prefix, n):
        prefix = tuple(prefix)
        for a in prefix:
            signed_pos(a, n)  # validates
        self.prefix = prefix
        self.n = n

    def canonical(self):
        prefix = self.prefix
        while prefix and prefix[-1] == 0:
            prefix = prefix[:-1]
        if prefix is self.prefix:
            return self
        return TwistedConfiguration(prefix, self.n)

    def letter(self, i):
        return self.prefix[i - 1] if i <= len(self.prefix) else 0

    def __eq__(self, other):
        return (
            isinstance(other, TwistedConfiguration)
            and self.n == other.n
            and self.canonical().prefix == other.canonical().prefix
        )

    def __hash__(self):
        return hash((self.canonical().prefix, self.n))

    def __repr__(self):
        return f"TwistedConfiguration({self.prefix}, n={self.n})"


def h_map_twisted(s):
    """Block list of the twisted local energies (tail is all zeros)."""
    n = s.n
    m = len(s.canonical().prefix)
    ones = [
        i
        for i in range(1, m + 1)
        if local_energy_twisted(s.letter(i), s.letter(i + 1), n) == 1
    ]
    blocks = []
    prev = 0
    for p in ones:
        blocks.append(p - prev)
        prev = p
    return tuple(blocks)


def energy_twisted(s):
    """sum_i i * H(s_i, s_{i+1}); finite since the tail contributes zero."""
    n = s.n
    m = len(s.canonical().prefix)
    return sum(
        i * local_energy_twisted(s.letter(i), s.letter(i + 1), n)
        for i in range(1, m + 1)
    )


def weight_twisted(s):
    """Doubled exponents of the weight: letters (+/-)i give (+/-)1 in slot i
    and the whole configuration is shifted by minus the half-sum vector."""
    vec = [-1] * s.n
    for a in s.canonical().prefix:
        if a > 0:
            vec[a - 1] += 2
        elif a < 0:
            vec[-a - 1] -= 2
    return tuple(vec)


def kappa_twisted(blocks, n):
    """Strip of the blocks with the pinned column of length 2n appended."""
    return BorderStrip(tuple(blocks) + (2 * n,))


def enumerate_twisted_fiber(blocks, n):
    """Depth-first scan of prefixes whose local energies realize the blocks.

    After the last forced 1 the letters must ascend strictly to 0 and stay
    there, so prefixes longer than p_r + n + 1 never occur; the scan length
    below is safely beyond that.
    """
    blocks = tuple(blocks)
    m = sum(blocks)
    limit = m + n + 2
    psums = set()
    acc = 0
    for b in blocks:
        acc += b
        psums.add(acc)
    target = [1 if i in psums else 0 for i in range(1, limit + 1)]
    letters = signed_alphabet(n)

    def extend(prefix):
        i = len(prefix)
        if i == limit:
            # boundary with the all-zero tail
            if local_energy_twisted(prefix[-1], 0, n) == target[limit - 1]:
                yield TwistedConfiguration(prefix, n)
            return
        for a in letters:
            if prefix and local_energy_twisted(prefix[-1], a, n) != target[i - 1]:
                continue
            prefix.append(a)
            yield from extend(prefix)
            prefix.pop()

    yield from extend([])


def chi_twisted(blocks, n, method="tableaux"):
    """Character of the fiber over a block list, by pinned-tableau
    enumeration or by the brute-force fiber scan."""
    ring = Ring(n, relation=False)
    if method == "tableaux":
        return ring.from_terms(
            (tableau_weight(t), 1)
            for t in enumerate_L_admissible(kappa_twisted(blocks, n), n)
        )
    if method == "fiber":
        return ring.from_terms(
            (weight_twisted(s), 1) for s in enumerate_twisted_fiber(blocks, n)
        )
    raise ValueError("method must be 'tableaux' or 'fiber'")


_SIGMA_CACHE = {}
_T_CACHE = {}


def sigma_character(n):
    """prod_i (x_i^(1/2) + x_i^(-1/2)), the spin character."""
    got = _SIGMA_CACHE.get(n)
    if got is not None:
        return got
    ring = Ring(n, relation=False)
    out = ring.one()
    for i in range(n):
        vec_p = tuple(1 if j == i else 0 for j in range(n))
        vec_m = tuple(-1 if j == i else 0 for j in range(n))
        out = out * (ring.monomial(vec_p) + ring.monomial(vec_m))
    _SIGMA_CACHE[n] = out
    return out


def _vector_alphabet(n):
    """Monomials x_1..x_n, 1, x_1^-1..x_n^-1 of the vector representation."""
    ring = Ring(n, relation=False)
    zs = []
    for i in range(n):
        zs.append(ring.monomial(tuple(2 if j == i else 0 for j in range(n))))
    zs.append(ring.one())
    for i in range(n):
        zs.append(ring.monomial(tuple(-2 if j == i else 0 for j in range(n))))
    return zs


def t_character(n, m):
    """The t_m entries of the determinant: 0 below zero, alternating sums
    of exterior powers of the vector representation up to n-1, and
    sigma^2 - t_{2n-1-m} from m = n on."""
    key = (n, m)
    got = _T_CACHE.get(key)
    if got is not None:
        return got
    ring = Ring(n, relation=False)
    if m < 0:
        out = ring.zero()
    elif m <= n - 1:
        zs = _vector_alphabet(n)
        out = ring.zero()
        j = m
        while j >= 0:
            out = out + elementary_symmetric(j, zs)
            j -= 2
    else:
        out = sigma_character(n) ** 2 - t_character(n, 2 * n - 1 - m)
    _T_CACHE[key] = out
    return out


def bn_fundamental_data(n, max_m):
    """The spin character together with the t entries up to ``max_m``."""
    return sigma_character(n), {m: t_character(n, m) for m in range(max_m + 1)}


def sL_determinant(blocks, n):
    """Closed form of the fiber character: sigma times the bordered
    Hessenberg determinant in the t characters."""
    blocks = tuple(blocks)
    ring = Ring(n, relation=False)
    r = len(blocks)
    psum = [0]
    for m in blocks:
        psum.append(psum[-1] + m)
    size = r + 1
    matrix = [[ring.one()] * size]
    for i in range(1, size):
        # column 0 falls out of the same rule: t_0 = 1 and t_{<0} = 0
        matrix.append(
            [t_character(n, psum[r + 1 - i] - psum[r - j]) for j in range(size)]
        )
    return sigma_character(n) * determinant(matrix)


def twisted_t_statistic(blocks):
    """Exponent of a strip in the decomposition: the pinned column counts
    as a column, so blocks (m_1..m_s) weigh sum (s+1-i) m_i."""
    s = len(blocks)
    return sum((s + 1 - i) * m for i, m in enumerate(blocks, start=1))


def twisted_strips(order):
    """All block lists with twisted statistic at most ``order``."""
    yield ()
    stack = [((), 0)]
    while stack:
        blocks, _t = stack.pop()
        s = len(blocks) + 1
        m = 1
        while True:
            cand = blocks + (m,)
            t = twisted_t_statistic(cand)
            if t > order:
                break
            yield cand
            stack.append((cand, t))
            m += 1


def twisted_decomposition(n, order):
    """Strip-sum form of the level-1 character, via the determinant."""
    ring = Ring(n, relation=False)
    return build_qseries(
        ring,
        0,
        order,
        (
            (twisted_t_statistic(blocks), sL_determinant(blocks, n))
            for blocks in twisted_strips(order)
        ),
    )


def twisted_character_brute(n, order):
    """Fiber-summed level-1 character, truncated by energy.

    The energy of a fiber equals the twisted statistic of its blocks, so
    block lists within the window enumerate every contributing state; the
    fibers themselves are scanned with the brute-force oracle.
    """
    ring = Ring(n, relation=False)
    return build_qseries(
        ring,
        0,
        order,
        (
            (twisted_t_statistic(blocks), chi_twisted(blocks, n, method="fiber"))
            for blocks in twisted_strips(order)
        ),
    )


def twisted_level1_theta(n, order):
    """Lattice form: integer shifts of the half-sum vector, graded by
    sum gamma_i (gamma_i + 1) / 2, over the full q-factorial denominator."""
    ring = Ring(n, relation=False)
    gmax = 1
    while gmax * (gmax + 1) // 2 <= order:
        gmax += 1

    def contributions():
        for gamma in product(range(-gmax - 1, gmax + 1), repeat=n):
            expo = sum(g * (g + 1) // 2 for g in gamma)
            if expo <= order:
                yield expo, ring.monomial(tuple(2 * g + 1 for g in gamma))

    numerator = build_qseries(ring, 0, order, contributions(), drop_above=True)
    return numerator * inverse_pochhammer_series(ring, n, order)
