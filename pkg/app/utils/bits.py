"""
Bitset helpers. Vertex sets are plain ints: bit i set means vertex i is present.
"""
from typing import Iterable, Iterator

import numpy as np


def popcount(mask: int) -> int:
    """Number of set bits."""
    return bin(mask).count("1")


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def lowest_bit(mask: int) -> int:
    """Index of the lowest set bit; mask must be nonzero."""
    return (mask & -mask).bit_length() - 1


def full_mask(size: int) -> int:
    return (1 << size) - 1


def mask_from_bool_row(row: np.ndarray) -> int:
    """Pack a boolean vector into an int (entry i -> bit i)."""
    if row.size == 0:
        return 0
    packed = np.packbits(row.astype(bool), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")
