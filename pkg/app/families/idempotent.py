"""
Idempotent graphs of the Boolean ring Z_2^w.

Every element is idempotent, a | b iff support(b) is inside support(a), and
distinct elements never divide each other both ways.
"""
from typing import Optional, Sequence, Tuple

import numpy as np

from app.core import config
from app.core.errors import DegenerateQuery, InvalidInput, WidthLimitExceeded
from app.models.graph import Graph
from app.models.poset import Poset
from app.models.ramsey import RamseyQuery
from app.models.rings import IdempotentMask
from app.order.poset import validate_poset
from app.utils.bits import full_mask

Blocks = Tuple[Tuple[int, ...], ...]


def _check_width(width: int, cap: Optional[int]) -> None:
    limit = config.IDEMPOTENT_WIDTH_CAP if cap is None else cap
    if width < 1:
        raise InvalidInput(f"Width must be >= 1, got {width}")
    if width > limit:
        raise WidthLimitExceeded(width, limit)


def idempotent_graph(width: int, cap: Optional[int] = None) -> Graph:
    """
    Vertex v is the mask v; edge iff the masks are distinct and one support
    contains the other.

    Raises:
        WidthLimitExceeded above the width cap
    """
    _check_width(width, cap)
    full = full_mask(width)
    adjacency = []
    for mask in range(full + 1):
        nbrs = 1  # the empty support is inside every support
        sub = (mask - 1) & mask
        while sub:
            nbrs |= 1 << sub
            sub = (sub - 1) & mask
        rest = full & ~mask
        extra = rest
        while extra:
            nbrs |= 1 << (mask | extra)
            extra = (extra - 1) & rest
        adjacency.append(nbrs & ~(1 << mask))
    labels = tuple(IdempotentMask(width, mask).label for mask in range(full + 1))
    return Graph(full + 1, tuple(adjacency), labels)


def idempotent_subposet(width: int, masks: Sequence[int]) -> Poset:
    """a <= b iff a | b, i.e. support(b) inside support(a), on the given masks."""
    elements = [IdempotentMask(width, mask) for mask in masks]
    leq = np.array([[a.divides(b) for b in elements] for a in elements], dtype=bool)
    return validate_poset(leq)


def idempotent_poset(width: int, cap: Optional[int] = None) -> Poset:
    _check_width(width, cap)
    masks = np.arange(1 << width, dtype=np.int64)
    leq = (masks[None, :] & ~masks[:, None]) == 0
    return validate_poset(leq)


def generator_product(width: int, indices: Sequence[int]) -> int:
    """Product of the maximal-ideal generators p_i (all ones, bit i-1 cleared)."""
    product = full_mask(width)
    for i in indices:
        product &= ~(1 << (i - 1))
    return product


def idempotent_extremal(q: RamseyQuery) -> Tuple[int, Blocks]:
    """
    Width w = (n-1)(m-1), n_i = (i-1)(m-1), a_i = p_1...p_{n_i};
    block i is {a_i * p_{n_i+j} : 1 <= j <= m-1}.

    Raises:
        DegenerateQuery if n < 2 or m < 2
    """
    if q.n < 2 or q.m < 2:
        raise DegenerateQuery(q.n, q.m)
    width = (q.n - 1) * (q.m - 1)
    blocks = []
    for i in range(1, q.n):
        n_i = (i - 1) * (q.m - 1)
        prefix = list(range(1, n_i + 1))
        blocks.append(tuple(generator_product(width, prefix + [n_i + j]) for j in range(1, q.m)))
    return width, tuple(blocks)


def extremal_factor_counts(q: RamseyQuery) -> Tuple[Tuple[int, ...], ...]:
    """Generators multiplied into each element of idempotent_extremal(q): a_i has n_i, one more joins it."""
    return tuple(tuple((i - 1) * (q.m - 1) + 1 for _ in range(1, q.m)) for i in range(1, q.n))
