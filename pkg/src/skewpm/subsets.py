"""Vertex subsets of [n] stored as int bitmasks.

Bit ``k`` stands for vertex ``k + 1``. Everything user-facing is 1-based,
everything here is 0-based.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

from .errors import SubsetRangeError

VertexSubset = int


def full_mask(n: int) -> VertexSubset:
    return (1 << n) - 1


def complement(mask: VertexSubset, n: int) -> VertexSubset:
    return full_mask(n) & ~mask


def popcount(mask: VertexSubset) -> int:
    return bin(mask).count("1")


def members(mask: VertexSubset) -> list[int]:
    """0-based members of ``mask`` in ascending order."""
    out = []
    k = 0
    while mask:
        if mask & 1:
            out.append(k)
        mask >>= 1
        k += 1
    return out


def from_members(indices: Iterable[int]) -> VertexSubset:
    mask = 0
    for k in indices:
        if k < 0:
            raise SubsetRangeError(f"negative index {k}")
        mask |= 1 << k
    return mask


def from_indices(indices: Iterable[int], n: int | None = None) -> VertexSubset:
    """Build a mask from 1-based vertex labels."""
    mask = 0
    for i in indices:
        if i < 1 or (n is not None and i > n):
            raise SubsetRangeError(f"vertex {i} outside [1, {n}]")
        mask |= 1 << (i - 1)
    return mask


def to_indices(mask: VertexSubset) -> list[int]:
    """1-based vertex labels of ``mask``."""
    return [k + 1 for k in members(mask)]


def check_within(mask: VertexSubset, n: int) -> None:
    if mask < 0 or mask >> n:
        raise SubsetRangeError(f"subset {to_indices(mask)} not contained in [1, {n}]")


def subsets_of_size(n: int, k: int) -> Iterator[VertexSubset]:
    """All k-subsets of [n] in ascending bitmask order."""
    masks = [from_members(c) for c in combinations(range(n), k)]
    masks.sort()
    return iter(masks)


def is_trivial(mask: VertexSubset, n: int) -> bool:
    """True for the empty set, [n] and singletons."""
    return mask == 0 or mask == full_mask(n) or popcount(mask) == 1
