"""
Integer partitions: values, canonical order, refinement and splittings.

Canonical order is descending lexicographic on descending part tuples, so
(2) comes before (1, 1). Every vector and matrix in the library is indexed
in this order.
"""
from __future__ import annotations

from collections import Counter
from enum import Enum
from functools import lru_cache
from typing import Iterable, List, Sequence, Tuple

from utils import CharnumError, WeightMismatchError, as_integer


class Partition(tuple):
    """Weakly decreasing tuple of positive integers. The empty tuple is valid."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(as_integer(p) for p in parts)
        if any(p < 1 for p in parts):
            raise CharnumError(f"partition parts must be positive: {parts}")
        if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
            raise CharnumError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Build from parts in any order."""
        return cls(sorted((as_integer(p) for p in parts), reverse=True))

    @property
    def weight(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"


class Order(str, Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


EMPTY = Partition()


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> Tuple[Partition, ...]:
    if n == 0:
        return (EMPTY,)
    out: List[Partition] = []
    for head in range(min(n, largest), 0, -1):
        for tail in _partitions(n - head, head):
            out.append(Partition((head,) + tuple(tail)))
    return tuple(out)


def enumerate_partitions(n: int) -> List[Partition]:
    """All partitions of n in descending lexicographic order."""
    if n < 0:
        raise CharnumError(f"n must be nonnegative, got {n}")
    return list(_partitions(n, n))


def partition_count(n: int) -> int:
    return len(_partitions(n, n))


@lru_cache(maxsize=None)
def partition_index(n: int) -> dict:
    """Map partition -> position in the canonical order of weight n."""
    return {p: i for i, p in enumerate(_partitions(n, n))}


def _check_weights(I: Sequence[int], J: Sequence[int]) -> None:
    if sum(I) != sum(J):
        raise WeightMismatchError(
            f"partitions {tuple(I)} and {tuple(J)} have different weights"
        )


def lex_compare(I: Partition, J: Partition) -> Order:
    _check_weights(I, J)
    # equal weights: neither can be a proper prefix of the other
    a, b = tuple(I), tuple(J)
    if a == b:
        return Order.EQUAL
    return Order.GREATER if a > b else Order.LESS


def union(I: Partition, J: Partition) -> Partition:
    return Partition.from_parts(tuple(I) + tuple(J))


def is_refinement(I: Partition, J: Partition) -> bool:
    """
    True iff the parts of I can be grouped into len(J) blocks whose sums
    are the parts of J. Backtracks over block assignments, largest parts
    first; blocks with equal remaining capacity are interchangeable.
    """
    _check_weights(I, J)
    parts = sorted(I, reverse=True)
    remaining = list(J)

    def place(k: int) -> bool:
        if k == len(parts):
            return all(r == 0 for r in remaining)
        tried = set()
        for b, cap in enumerate(remaining):
            if cap < parts[k] or cap in tried:
                continue
            tried.add(cap)
            remaining[b] -= parts[k]
            if place(k + 1):
                return True
            remaining[b] += parts[k]
        return False

    return place(0)


def _sub_multisets(counts: Tuple[Tuple[int, int], ...], target: int):
    """Yield (chosen, rest) count tuples where chosen sums to target."""
    if not counts:
        if target == 0:
            yield (), ()
        return
    (value, mult), tail = counts[0], counts[1:]
    for take in range(min(mult, target // value), -1, -1):
        for chosen, rest in _sub_multisets(tail, target - take * value):
            head_chosen = ((value, take),) if take else ()
            head_rest = ((value, mult - take),) if mult - take else ()
            yield head_chosen + chosen, head_rest + rest


def _expand(counts: Tuple[Tuple[int, int], ...]) -> Partition:
    parts: List[int] = []
    for value, mult in counts:
        parts.extend([value] * mult)
    return Partition.from_parts(parts)


@lru_cache(maxsize=None)
def _splittings(I: Partition, shape: Tuple[int, ...]) -> Tuple[Tuple[Partition, ...], ...]:
    if not shape:
        return ((),) if not I else ()
    counts = tuple(sorted(Counter(I).items(), reverse=True))
    out = []
    for chosen, rest in _sub_multisets(counts, shape[0]):
        head = _expand(chosen)
        for tail in _splittings(_expand(rest), shape[1:]):
            out.append((head,) + tail)
    return tuple(out)


def splittings(I: Partition, shape: Sequence[int]) -> List[Tuple[Partition, ...]]:
    """
    All distinct ordered tuples (I_1, ..., I_q) with weight(I_l) = shape[l]
    whose multiset union is I. A zero in shape matches only the empty
    partition.
    """
    shape = tuple(int(j) for j in shape)
    if any(j < 0 for j in shape):
        raise CharnumError(f"shape entries must be nonnegative: {shape}")
    if sum(I) != sum(shape):
        raise WeightMismatchError(
            f"partition {tuple(I)} has weight {sum(I)}, shape sums to {sum(shape)}"
        )
    return list(_splittings(Partition(I), shape))
