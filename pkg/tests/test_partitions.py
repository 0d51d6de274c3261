import pytest
from hypothesis import given, strategies as st

from partitions import (
    EMPTY,
    Order,
    Partition,
    enumerate_partitions,
    is_refinement,
    lex_compare,
    partition_count,
    splittings,
    union,
)
from utils import CharnumError, WeightMismatchError

P = Partition


def brute_force_count(n: int) -> int:
    # coin-change count over part sizes 1..n
    ways = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            ways[total] += ways[total - part]
    return ways[n]


def test_enumerate_small():
    assert enumerate_partitions(0) == [EMPTY]
    assert enumerate_partitions(3) == [P((3,)), P((2, 1)), P((1, 1, 1))]
    assert enumerate_partitions(4) == [P((4,)), P((3, 1)), P((2, 2)), P((2, 1, 1)), P((1, 1, 1, 1))]


@pytest.mark.parametrize("n", range(21))
def test_counts_match_brute_force(n):
    assert len(enumerate_partitions(n)) == brute_force_count(n) == partition_count(n)


def test_enumeration_is_strictly_descending():
    for n in range(1, 12):
        parts = enumerate_partitions(n)
        for a, b in zip(parts, parts[1:]):
            assert lex_compare(a, b) is Order.GREATER


def test_partition_rejects_bad_parts():
    with pytest.raises(CharnumError):
        P((1, 2))
    with pytest.raises(CharnumError):
        P((2, 0))
    assert Partition.from_parts([1, 3, 2]) == P((3, 2, 1))
    assert P((2, 1)).weight == 3
    assert EMPTY.weight == 0


def test_lex_compare():
    assert lex_compare(P((2,)), P((1, 1))) is Order.GREATER
    assert lex_compare(P((2, 1)), P((2, 1))) is Order.EQUAL
    assert lex_compare(P((1, 1, 1)), P((2, 1))) is Order.LESS
    with pytest.raises(WeightMismatchError):
        lex_compare(P((2,)), P((1,)))


def test_union():
    assert union(P((2,)), P((1,))) == P((2, 1))
    assert union(P((1,)), P((1,))) == P((1, 1))
    assert union(EMPTY, P((3, 1))) == P((3, 1))


def test_is_refinement():
    assert is_refinement(P((1, 1, 1)), P((2, 1)))
    assert not is_refinement(P((3,)), P((2, 1)))
    assert is_refinement(P((2, 1)), P((2, 1)))
    assert is_refinement(P((2, 2, 1, 1)), P((3, 3)))
    assert is_refinement(P((3, 1, 1, 1)), P((3, 3)))
    assert not is_refinement(P((2, 2, 2)), P((3, 3)))
    with pytest.raises(WeightMismatchError):
        is_refinement(P((1,)), P((2,)))


def test_splittings_examples():
    assert splittings(P((1, 1)), (1, 1)) == [(P((1,)), P((1,)))]
    assert splittings(P((2, 1, 1)), (2, 2)) == [(P((2,)), P((1, 1))), (P((1, 1)), P((2,)))]
    assert splittings(P((3,)), (1, 2)) == []
    with pytest.raises(WeightMismatchError):
        splittings(P((3,)), (1, 1))


def test_splittings_with_empty_piece():
    assert splittings(P((2, 1)), (0, 3)) == [(EMPTY, P((2, 1)))]


@pytest.mark.parametrize("n", range(1, 9))
def test_single_piece_splitting(n):
    for I in enumerate_partitions(n):
        assert splittings(I, (n,)) == [(I,)]


@pytest.mark.parametrize("n", range(2, 9))
def test_splittings_swap_bijection(n):
    for I in enumerate_partitions(n):
        for a in range(1, n):
            forward = splittings(I, (a, n - a))
            backward = splittings(I, (n - a, a))
            assert sorted((K, J) for J, K in forward) == sorted(backward)
            assert len(set(forward)) == len(forward)


@pytest.mark.parametrize("n", range(1, 8))
def test_refinement_agrees_with_splittings_and_order(n):
    parts = enumerate_partitions(n)
    for I in parts:
        for J in parts:
            refines = is_refinement(I, J)
            assert refines == bool(splittings(I, tuple(J)))
            if refines:
                assert lex_compare(I, J) in (Order.LESS, Order.EQUAL)


@given(st.lists(st.integers(min_value=1, max_value=6), max_size=6),
       st.lists(st.integers(min_value=1, max_value=6), max_size=6))
def test_union_adds_weight_and_splits_back(a, b):
    I, J = Partition.from_parts(a), Partition.from_parts(b)
    U = union(I, J)
    assert U.weight == I.weight + J.weight
    assert (I, J) in splittings(U, (I.weight, J.weight))
    assert is_refinement(U, Partition.from_parts([w for w in (I.weight, J.weight) if w]))
