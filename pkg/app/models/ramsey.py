"""
Ramsey queries, witnesses and verification reports.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, Literal, Optional, Tuple

from app.core.errors import InvalidQuery
from app.models.graph import Graph


@dataclass(frozen=True)
class RamseyQuery:
    """Clique target n and independence target m."""
    n: int
    m: int

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise InvalidQuery(self.n, self.m)

    @property
    def threshold(self) -> int:
        """(n-1)(m-1)+1, the pigeonhole threshold."""
        return (self.n - 1) * (self.m - 1) + 1

    @property
    def description(self) -> str:
        return f"n={self.n},m={self.m}"


@dataclass(frozen=True)
class RamseyWitness:
    """Either a clique of exactly n vertices or an independent set of exactly m."""
    kind: Literal["clique", "independent"]
    vertices: Tuple[int, ...]

    @classmethod
    def clique(cls, vertices) -> "RamseyWitness":
        return cls("clique", tuple(vertices))

    @classmethod
    def independent(cls, vertices) -> "RamseyWitness":
        return cls("independent", tuple(vertices))

    @property
    def is_clique(self) -> bool:
        return self.kind == "clique"


@dataclass(frozen=True)
class ExtremalPartition:
    """n-1 disjoint blocks of m-1 vertices each."""
    n: int
    m: int
    blocks: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        seen = set()
        for block in self.blocks:
            if len(block) != self.m - 1:
                raise ValueError(f"Block {block} should have {self.m - 1} vertices")
            if seen.intersection(block):
                raise ValueError("Blocks must be disjoint")
            seen.update(block)
        if len(self.blocks) != self.n - 1:
            raise ValueError(f"Expected {self.n - 1} blocks, got {len(self.blocks)}")

    @property
    def vertex_count(self) -> int:
        return sum(len(block) for block in self.blocks)


@dataclass
class VerificationReport:
    """
    Outcome of an exhaustive verification or search.
    `details` carries operation-specific outcomes (extremal checks, raw subset counts).
    """
    query: RamseyQuery
    order: int
    enumerated: int
    all_pass: bool
    counterexample: Optional[Graph] = None
    elapsed_ms: float = 0.0
    details: Dict[str, Any] = field(default_factory=dict)


# A general-graph search reports in exactly the same shape.
SearchReport = VerificationReport
