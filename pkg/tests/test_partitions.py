from collections import Counter

import pytest

from kcrank.errors import BudgetExceeded, EmptyPartition, NeedsTwoComponents
from kcrank.partitions import (
    ColoredPartition,
    Partition,
    ag_crank,
    brute_force_table,
    distinct_odd_parity_counts,
    dyson_rank,
    enumerate_colored,
    enumerate_partitions,
    kcrank,
    parts_count_table,
    pk_table,
    rank_parity_counts,
)
from kcrank.series import PochhammerSpec, pochhammer

from conftest import binomial_product

# p(n) for n = 0..20
P = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490, 627]


def test_enumerate_small():
    assert [p.parts for p in enumerate_partitions(0)] == [()]
    assert [p.parts for p in enumerate_partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


@pytest.mark.parametrize("n", range(21))
def test_enumeration_is_exhaustive_and_ordered(n):
    parts = [p.parts for p in enumerate_partitions(n)]
    assert len(parts) == P[n]
    assert len(set(parts)) == P[n]
    assert parts == sorted(parts, reverse=True)
    assert all(sum(p) == n for p in parts)


def test_colored_examples():
    two = [str(cp) for cp in enumerate_colored(2, 2)]
    assert sorted(two) == sorted(["(2 | .)", "(11 | .)", "(1 | 1)", "(. | 2)", "(. | 11)"])
    ones = list(enumerate_colored(2, 1))
    assert sorted(kcrank(cp) for cp in ones) == [-1, 1]
    for k in (1, 2, 5):
        assert len(list(enumerate_colored(k, 0))) == 1


def test_kcrank():
    assert kcrank(ColoredPartition(((1, 1), (2,), ()))) == 1
    assert kcrank(ColoredPartition(((), ()))) == 0
    with pytest.raises(NeedsTwoComponents):
        kcrank(ColoredPartition(((3,),)))


def test_swap_is_an_involution_negating_kcrank():
    for cp in enumerate_colored(3, 6):
        sw = cp.swap_first_two()
        assert kcrank(sw) == -kcrank(cp)
        assert sw.swap_first_two() == cp
    objs = list(enumerate_colored(3, 6))
    assert {cp.swap_first_two() for cp in objs} == set(objs)


def test_ag_crank():
    assert ag_crank(Partition((3, 1))) == 0
    assert ag_crank(Partition((4,))) == 4
    assert ag_crank(Partition((1, 1, 1, 1))) == -4
    assert sorted(ag_crank(p) for p in enumerate_partitions(4)) == [-4, -2, 0, 2, 4]
    with pytest.raises(EmptyPartition):
        ag_crank(Partition(()))


def test_dyson_rank():
    assert dyson_rank(Partition((4,))) == 3
    assert dyson_rank(Partition((2, 2))) == 0
    assert dyson_rank(Partition((1, 1, 1))) == -2
    with pytest.raises(EmptyPartition):
        dyson_rank(Partition(()))


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))


def test_parts_count_table():
    t = parts_count_table(20)
    assert t(5, 2) == 2
    assert t(9, 3) == 7
    assert t(0, 0) == 1
    for n in range(1, 21):
        assert t(n, 1) == 1
        assert sum(t(n, s) for s in range(n + 1)) == P[n]
        assert t(n, n + 1) == 0
    counted = Counter(len(p) for p in enumerate_partitions(12))
    assert all(t(12, s) == counted[s] for s in range(13))


def test_pk_table():
    assert pk_table(1, 20) == P
    assert pk_table(2, 2)[2] == 5
    for k in range(6):
        assert pk_table(k, 0) == [1]
    # p_2 by enumeration of pairs
    assert pk_table(2, 8) == [sum(1 for _ in enumerate_colored(2, n)) for n in range(9)]


def test_distinct_odd_parity_counts():
    od0, od1 = distinct_odd_parity_counts(10)
    assert (od0[3], od1[3]) == (0, 1)
    assert od0[0] == 1
    total = binomial_product(range(1, 11, 2), 10, sign=1)
    assert [a + b for a, b in zip(od0, od1)] == total


def test_od_series_identities_to_60():
    od0, od1 = distinct_odd_parity_counts(60)
    plus = pochhammer(PochhammerSpec(-1, 1, 2), 60)
    minus = pochhammer(PochhammerSpec(1, 1, 2), 60)
    assert [(a + b) // 2 for a, b in zip(plus, minus)] == od0
    assert [(a - b) // 2 for a, b in zip(plus, minus)] == od1
    assert all((a + b) % 2 == 0 for a, b in zip(plus, minus))


def test_brute_force_table(printed_table):
    t = brute_force_table(3, 2)
    assert t(0, 2) == 3
    assert brute_force_table(2, 0).rows == ((1,),)
    with pytest.raises(BudgetExceeded):
        brute_force_table(2, 21)
    with pytest.raises(NeedsTwoComponents):
        brute_force_table(1, 3)
    assert brute_force_table(2, 3, budget=3).order == 3


def test_brute_force_against_printed_table(printed_table):
    t = brute_force_table(2, 12)
    diffs = {
        (n, m): (printed_table[n][m], t(m, n))
        for n in range(13)
        for m in range(n + 1)
        if printed_table[n][m] != t(m, n)
    }
    assert diffs == {(10, 1): (59, 58), (10, 5): (15, 16)}


def test_rank_parity_counts():
    assert rank_parity_counts(4) == (1, 4)
    assert rank_parity_counts(3) == (3, 0)
    with pytest.raises(BudgetExceeded):
        rank_parity_counts(10, budget=5)
    for n in range(1, 15):
        c = Counter(dyson_rank(p) % 2 for p in enumerate_partitions(n))
        assert rank_parity_counts(n) == (c[0], c[1])
