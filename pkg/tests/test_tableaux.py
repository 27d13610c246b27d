import random

import pytest

from ribbonchar.shapes import BorderStrip, Partition, SkewDiagram
from ribbonchar.tableaux import (
    GZScheme,
    STANDARD,
    Tableau,
    count_LR,
    enumerate_L_admissible,
    enumerate_admissible,
    enumerate_sst,
    gz_from_sst,
    is_lattice_permutation,
    kostka_number,
    signed_pos,
    sst_from_gz,
    tableau_from_json,
    tableau_to_json,
    tableau_weight,
)


def test_enumerate_sst_basics():
    sd = SkewDiagram.from_str("2/0")
    readings = [t.reading_word() for t in enumerate_sst(sd, 2)]
    assert sorted(readings) == [[1, 1], [2, 1], [2, 2]]
    assert list(enumerate_sst(SkewDiagram.from_str("1,1,1/0"), 2)) == []
    assert len(list(enumerate_sst(SkewDiagram.from_str("0/0"), 3))) == 1


def test_enumeration_is_duplicate_free_and_valid():
    rng = random.Random(6)
    for _ in range(20):
        cols = tuple(rng.randint(1, 3) for _ in range(rng.randint(0, 3)))
        sd = BorderStrip(cols).realize()
        n = rng.randint(1, 3)
        ts = list(enumerate_sst(sd, n))
        assert len(set(ts)) == len(ts)
        for t in ts:
            for (r, c), a in t.entries.items():
                if (r - 1, c) in t.entries:
                    assert t.entries[(r - 1, c)] < a
                if (r, c - 1) in t.entries:
                    assert t.entries[(r, c - 1)] <= a
            assert max(
                (sum(1 for (rr, cc) in t.entries if cc == col) for col in range(1, 10)),
                default=0,
            ) <= n


def test_weight_bookkeeping_consistency():
    sd = SkewDiagram.from_str("3,2/1")
    ts = list(enumerate_sst(sd, 3))
    total = 0
    for t in ts:
        vec = tableau_weight(t)
        assert sum(vec) == 2 * sd.size()
        total += 1
    assert total == len(set(ts))


def test_displayed_tableau_weight():
    sd = SkewDiagram.from_str("5,4,4,1/4,3,2")
    t = Tableau(sd, {(1, 5): 2, (2, 4): 1, (3, 3): 2, (3, 4): 2, (4, 1): 3}, STANDARD, 3)
    assert tableau_weight(t) == (2, 6, 2)


def test_simple_weight():
    sd = SkewDiagram.from_str("2/0")
    t = Tableau(sd, {(1, 1): 1, (1, 2): 2}, STANDARD, 3)
    assert tableau_weight(t) == (2, 2, 0)


def test_lattice_permutation_and_count_LR():
    assert count_LR(BorderStrip((1,)), Partition((1,))) == 1
    assert count_LR(BorderStrip((2,)), Partition((2,))) == 0
    assert count_LR(BorderStrip((2,)), Partition((1, 1))) == 1
    assert count_LR(BorderStrip((1, 1)), Partition((1, 1))) == 0
    assert count_LR(BorderStrip((1, 1)), Partition((2,))) == 1
    assert count_LR(BorderStrip((1, 1)), Partition((3,))) == 0
    # two fillings exist on these shapes in the size-6 example
    assert count_LR(BorderStrip((2, 2, 2)), Partition((3, 2, 1))) == 2
    assert count_LR(BorderStrip((1, 2, 2, 1)), Partition((3, 2, 1))) == 2
    assert count_LR(BorderStrip((1, 2, 3)), Partition((3, 2, 1))) == 1


def test_lattice_reading_order_is_strip_order():
    # the first pictured size-6 strip: word 1,1,2,1,2,3 along the strip
    bs = BorderStrip((1, 2, 3))
    sd = bs.realize()
    entries = {
        (1, 3): 1,
        (1, 2): 1,
        (2, 2): 2,
        (2, 1): 1,
        (3, 1): 2,
        (4, 1): 3,
    }
    t = Tableau(sd, entries, STANDARD, 4)
    assert t.reading_word() == [1, 1, 2, 1, 2, 3]
    assert is_lattice_permutation(t)


def test_gz_worked_example():
    sd = SkewDiagram.from_str("5,4,4,1/4,3,2")
    t = Tableau(sd, {(1, 5): 2, (2, 4): 1, (3, 3): 2, (3, 4): 2, (4, 1): 3}, STANDARD, 3)
    g = gz_from_sst(t, 3)
    assert [tuple(r) for r in g.rows] == [
        (4, 3, 2),
        (4, 4, 2),
        (5, 4, 4),
        (5, 4, 4, 1),
    ]
    assert sst_from_gz(g) == t
    assert g.weight() == tableau_weight(t)


def test_gz_round_trip_exhaustive():
    sd = SkewDiagram.from_str("3,2/1")
    for t in enumerate_sst(sd, 2):
        g = gz_from_sst(t, 2)
        assert sst_from_gz(g) == t
        assert g.weight() == tableau_weight(t)


def test_gz_empty_shape():
    sd = SkewDiagram(Partition((2, 1)), Partition((2, 1)))
    t = Tableau(sd, {}, STANDARD, 2)
    g = gz_from_sst(t, 2)
    assert all(tuple(r) == (2, 1) for r in g.rows)
    assert sst_from_gz(g) == t


def test_gz_interlacing_violation():
    with pytest.raises(ValueError):
        GZScheme([Partition((2,)), Partition((1,))], N=1)
    with pytest.raises(ValueError):
        GZScheme([Partition(), Partition((1, 1, 1))], N=1)


def test_signed_order():
    n = 2
    order = [1, 2, 0, -2, -1]
    assert [signed_pos(a, n) for a in order] == [1, 2, 3, 4, 5]
    with pytest.raises(ValueError):
        signed_pos(3, 2)


def test_admissible_zero_pairs():
    # vertical (0,0) allowed, horizontal forbidden
    col = SkewDiagram.from_str("1,1/0")
    fillings = {tuple(t.reading_word()) for t in enumerate_admissible(col, 1)}
    assert (0, 0) in fillings
    row = SkewDiagram.from_str("2/0")
    fillings = {tuple(t.reading_word()) for t in enumerate_admissible(row, 1)}
    assert (0, 0) not in fillings


def test_signed_column_chains():
    # vertical chains ascend strictly except at 0, which may repeat freely:
    # a rank-1 column of 4 carries exactly these four fillings
    col = SkewDiagram.from_str("1,1,1,1/0")
    ts = list(enumerate_admissible(col, 1))
    assert sorted(t.reading_word() for t in ts) == [
        [0, 0, 0, -1],
        [0, 0, 0, 0],
        [1, 0, 0, -1],
        [1, 0, 0, 0],
    ]
    # non-zero letters cannot repeat, so a zero-free column is capped at 2n+1
    no_zero = [
        t
        for t in enumerate_admissible(SkewDiagram.from_str("1,1,1,1/0"), 1)
        if 0 not in t.reading_word()
    ]
    assert no_zero == []


def test_L_admissible_rank_one():
    ts = list(enumerate_L_admissible(BorderStrip((2,)), 1))
    weights = sorted(tableau_weight(t) for t in ts)
    assert weights == [(-1,), (1,)]
    with pytest.raises(ValueError):
        list(enumerate_L_admissible(BorderStrip((1, 1)), 1))


def test_L_admissible_rank_one_excited():
    ts = list(enumerate_L_admissible(BorderStrip((1, 2)), 1))
    weights = sorted(tableau_weight(t) for t in ts)
    assert weights == [(-3,), (-1,), (1,), (3,)]
    for t in ts:
        assert t.entries[(2, 1)] == -1  # pinned cell stored literally


def test_kostka_number():
    assert kostka_number(Partition((2, 1)), Partition((1, 1, 1))) == 2
    assert kostka_number(Partition((2,)), Partition((1, 1))) == 1
    assert kostka_number(Partition((1, 1)), Partition((2,))) == 0
    assert kostka_number(Partition(), Partition()) == 1


def test_tableau_json_round_trip():
    sd = SkewDiagram.from_str("3,2/1")
    for t in enumerate_sst(sd, 2):
        doc = tableau_to_json(t)
        assert doc["shape"] == "3,2/1"
        back = tableau_from_json(doc, STANDARD, 2)
        assert back == t
