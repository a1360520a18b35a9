"""
Domain models for finite posets, their acyclic orientation and Mirsky levels.
"""
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, List, Tuple

import numpy as np

from app.core.errors import NotSquare
from app.utils.bits import mask_from_bool_row


@dataclass(frozen=True, eq=False)
class Poset:
    """
    A finite poset on 0..size-1 stored as a dense boolean relation matrix.
    leq[a][b] is True iff a <= b. Build through validate_poset(), which
    enforces the order axioms; the constructor only checks the shape.
    """
    size: int
    leq: np.ndarray

    def __post_init__(self):
        if self.leq.ndim != 2:
            raise NotSquare(self.leq.size, 0)
        if self.leq.shape[0] != self.leq.shape[1]:
            raise NotSquare(*self.leq.shape)
        if self.leq.shape[0] != self.size:
            raise NotSquare(self.size, self.leq.shape[0])
        self.leq.setflags(write=False)

    @cached_property
    def down(self) -> Tuple[int, ...]:
        """Strict down-sets as bitmasks: bit b of down[a] set iff b < a."""
        strict = self.leq & ~np.eye(self.size, dtype=bool)
        return tuple(mask_from_bool_row(strict[:, a]) for a in range(self.size))

    @cached_property
    def up(self) -> Tuple[int, ...]:
        """Strict up-sets as bitmasks: bit b of up[a] set iff a < b."""
        strict = self.leq & ~np.eye(self.size, dtype=bool)
        return tuple(mask_from_bool_row(strict[a, :]) for a in range(self.size))

    def comparable(self, a: int, b: int) -> bool:
        return bool(self.leq[a, b] or self.leq[b, a])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.size == other.size and bool(np.array_equal(self.leq, other.leq))

    def __hash__(self) -> int:
        return hash((self.size, self.down))


@dataclass(frozen=True)
class OrientedGraph:
    """Directed graph on 0..size-1; arcs (a, b) with a != b."""
    size: int
    arcs: FrozenSet[Tuple[int, int]]

    def __post_init__(self):
        for a, b in self.arcs:
            if a == b or not (0 <= a < self.size and 0 <= b < self.size):
                raise ValueError(f"Invalid arc ({a}, {b}) for {self.size} vertices")

    @cached_property
    def in_masks(self) -> Tuple[int, ...]:
        """Predecessor bitmask per vertex."""
        preds = [0] * self.size
        for a, b in self.arcs:
            preds[b] |= 1 << a
        return tuple(preds)


@dataclass(frozen=True)
class MirskyLevels:
    """
    Longest-path level per vertex of the induced sub-digraph.
    Only vertices of the subset the levels were computed on appear in `level`.
    """
    level: Dict[int, int]
    max_level: int
    in_masks: Tuple[int, ...] = field(repr=False, default=())

    def vertices_at(self, target_level: int) -> List[int]:
        return sorted(v for v, lv in self.level.items() if lv == target_level)
