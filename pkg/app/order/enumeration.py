"""
Labeled poset enumeration and random poset generation.

Posets are grown one element at a time. Element k picks a down-closed set D
and an up-closed set U of the earlier elements such that every d in D lies
below every u in U; this produces every labeled poset exactly once.
"""
from typing import Iterator, List, Optional, Tuple

import numpy as np

from app.models.poset import Poset
from app.order.poset import validate_poset
from app.utils.bits import full_mask, iter_bits

DownSets = Tuple[int, ...]

# Labeled posets on 0..7 elements, used as the enumerator self-check.
KNOWN_LABELED_POSET_COUNTS = (1, 1, 3, 19, 219, 4231, 130023, 6129859)


def _closed_sets(relation: List[int], k: int) -> List[int]:
    """Subsets S of 0..k-1 with relation[s] inside S for every s in S."""
    return [
        candidate
        for candidate in range(1 << k)
        if all(relation[s] & ~candidate == 0 for s in iter_bits(candidate))
    ]


def _extend(down: List[int], up: List[int], size: int) -> Iterator[Tuple[DownSets, DownSets]]:
    k = len(down)
    if k == size:
        yield tuple(down), tuple(up)
        return

    everything = full_mask(k)
    filters = _closed_sets(up, k)
    for lower in _closed_sets(down, k):
        allowed = everything
        for d in iter_bits(lower):
            allowed &= up[d]
        bit = 1 << k
        for upper in filters:
            if upper & ~allowed:
                continue
            next_down = down + [lower]
            next_up = up + [upper]
            for d in iter_bits(lower):
                next_up[d] |= bit
            for u in iter_bits(upper):
                next_down[u] |= bit
            yield from _extend(next_down, next_up, size)


def _up_sets(down: DownSets) -> List[int]:
    up = [0] * len(down)
    for a, mask in enumerate(down):
        for b in iter_bits(mask):
            up[b] |= 1 << a
    return up


def iter_labeled_posets(size: int, prefix: Optional[DownSets] = None) -> Iterator[DownSets]:
    """
    Yield every labeled poset on 0..size-1 as a tuple of strict down-set masks.

    Args:
        size: number of elements
        prefix: if given, only posets whose restriction to the first
            len(prefix) elements equals this poset are produced (one shard)
    """
    for down, _ in iter_labeled_relations(size, prefix):
        yield down


def iter_labeled_relations(size: int, prefix: Optional[DownSets] = None) -> Iterator[Tuple[DownSets, DownSets]]:
    """Like iter_labeled_posets, but yields (down-sets, up-sets) pairs."""
    start = list(prefix) if prefix is not None else []
    if len(start) > size:
        raise ValueError(f"Prefix of {len(start)} elements does not fit in {size}")
    yield from _extend(start, _up_sets(tuple(start)), size)


def count_labeled_posets(size: int) -> int:
    return sum(1 for _ in iter_labeled_posets(size))


def random_poset(rng: np.random.Generator, size: int, density: float = 0.3) -> Poset:
    """
    Random DAG on a hidden linear order, transitively closed, then relabeled
    by a random permutation.
    """
    strict = np.triu(rng.random((size, size)) < density, k=1)
    leq = strict | np.eye(size, dtype=bool)
    # Warshall closure
    for k in range(size):
        leq |= np.outer(leq[:, k], leq[k, :])
    perm = rng.permutation(size)
    return validate_poset(leq[np.ix_(perm, perm)])
