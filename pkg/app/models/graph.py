"""
Domain model for simple undirected graphs with bitset adjacency.
"""
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from app.core.errors import InvalidGraph, VertexOutOfRange
from app.utils.bits import full_mask, iter_bits, popcount


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph on 0..size-1.
    adjacency[v] is the neighbor bitmask of v; labels are optional display strings.
    """
    size: int
    adjacency: Tuple[int, ...]
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        if len(self.adjacency) != self.size:
            raise InvalidGraph(f"Expected {self.size} adjacency masks, got {len(self.adjacency)}")
        if self.labels is not None and len(self.labels) != self.size:
            raise InvalidGraph(f"Expected {self.size} labels, got {len(self.labels)}")
        allowed = full_mask(self.size)
        for v, nbrs in enumerate(self.adjacency):
            if nbrs & ~allowed:
                raise InvalidGraph(f"Vertex {v} has neighbors outside the vertex set")
            if (nbrs >> v) & 1:
                raise InvalidGraph(f"Self-loop at vertex {v}")
            for u in iter_bits(nbrs):
                if not (self.adjacency[u] >> v) & 1:
                    raise InvalidGraph(f"Adjacency is not symmetric on ({v}, {u})")

    @classmethod
    def from_edges(
        cls,
        size: int,
        edges: Iterable[Tuple[int, int]],
        labels: Optional[Sequence[str]] = None,
    ) -> "Graph":
        """Build a graph from an edge list; duplicate edges are merged."""
        adjacency = [0] * size
        for a, b in edges:
            for v in (a, b):
                if not 0 <= v < size:
                    raise VertexOutOfRange(v, size)
            if a == b:
                raise InvalidGraph(f"Self-loop at vertex {a}")
            adjacency[a] |= 1 << b
            adjacency[b] |= 1 << a
        return cls(size, tuple(adjacency), tuple(labels) if labels is not None else None)

    @classmethod
    def empty(cls, size: int) -> "Graph":
        return cls(size, (0,) * size)

    @classmethod
    def complete(cls, size: int) -> "Graph":
        everyone = full_mask(size)
        return cls(size, tuple(everyone & ~(1 << v) for v in range(size)))

    def has_edge(self, a: int, b: int) -> bool:
        return bool((self.adjacency[a] >> b) & 1)

    def edges(self) -> List[Tuple[int, int]]:
        """Edges (i, j) with i < j, sorted lexicographically."""
        return [
            (a, b)
            for a in range(self.size)
            for b in iter_bits(self.adjacency[a] >> (a + 1) << (a + 1))
        ]

    @property
    def edge_count(self) -> int:
        return sum(popcount(nbrs) for nbrs in self.adjacency) // 2

    def label(self, v: int) -> str:
        if self.labels is None:
            return str(v)
        return self.labels[v]

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.size:
            raise VertexOutOfRange(v, self.size)


@dataclass(frozen=True)
class Distance:
    """A graph distance; value None is the infinite distance of disconnected pairs."""
    value: Optional[int]

    def to_json(self):
        return "inf" if self.value is None else self.value

    def __str__(self) -> str:
        return "∞" if self.value is None else str(self.value)


INFINITE = Distance(None)
