"""Small helpers for Python ints used as vertex bitsets."""

from __future__ import annotations

from collections.abc import Iterable, Iterator


def iter_bits(x: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def bits_to_list(x: int) -> list[int]:
    return list(iter_bits(x))


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def lowest_bit(x: int) -> int:
    """Index of the lowest set bit; ``x`` must be nonzero."""
    return (x & -x).bit_length() - 1
