"""
Pydantic models for the Graph and Poset JSON formats and the graph endpoints.
"""
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field, field_validator

Family = Literal[
    "pdg", "div-zn", "ideal-zn", "idm", "cone",
    "extremal-po", "extremal-pdg", "extremal-idm", "extremal-mat",
]

Invariant = Literal[
    "clique", "independence", "connected", "diameter", "girth", "domination",
    "degrees", "multipartite", "planar", "cliques",
]

INVARIANTS: List[str] = list(Invariant.__args__)


class GraphPayload(BaseModel):
    """Graph JSON: edges as [i, j] pairs with i < j, sorted lexicographically."""

    size: int = Field(..., description="Vertex count", ge=0)
    labels: List[str] = Field(default_factory=list, description="Per-vertex display labels")
    edges: List[List[int]] = Field(default_factory=list, description="Edge list [[i, j], ...]")

    @field_validator("edges")
    @classmethod
    def edges_are_pairs(cls, edges: List[List[int]]) -> List[List[int]]:
        for edge in edges:
            if len(edge) != 2:
                raise ValueError(f"Edge {edge} must have exactly two endpoints")
        return edges


class PosetPayload(BaseModel):
    """Poset JSON: leq[a][b] iff a <= b."""

    size: int = Field(..., description="Element count", ge=1)
    leq: List[List[bool]] = Field(..., description="Relation matrix")


class GenerateRequest(BaseModel):
    """Request payload for POST /graphs/generate."""

    family: Family = Field(..., description="Graph family to build")
    n: Optional[int] = Field(None, description="pdg size, Z_n modulus, or clique target", ge=1)
    m: Optional[int] = Field(None, description="Independence target for extremal families", ge=1)
    width: Optional[int] = Field(None, description="Idempotent graph width", ge=1)
    k: Optional[int] = Field(None, description="Semi-cone modulus", ge=2)
    lo: Optional[int] = Field(None, description="Cone window lower end")
    hi: Optional[int] = Field(None, description="Cone window upper end")
    moduli: Optional[List[int]] = Field(None, description="Explicit pairwise-coprime moduli for pdg")
    dimension: int = Field(2, description="Matrix dimension for extremal-mat", ge=2)


class GenerateResponse(BaseModel):
    """Response from POST /graphs/generate."""

    family: str = Field(..., description="Family that was generated")
    graph: GraphPayload = Field(..., description="Generated graph")
    blocks: Optional[List[List[int]]] = Field(None, description="Extremal blocks A_1..A_{n-1}, if any")


class AnalyzeRequest(BaseModel):
    """Request payload for POST /graphs/analyze."""

    graph: GraphPayload = Field(..., description="Graph to analyze")
    invariants: List[Invariant] = Field(..., description="Invariants to compute", min_length=1)


class AnalyzeResponse(BaseModel):
    """Response from POST /graphs/analyze; distances are integers or 'inf'."""

    size: int = Field(..., description="Vertex count")
    edge_count: int = Field(..., description="Edge count")
    results: Dict[str, Any] = Field(
        ..., description="Invariant name -> value"
    )
