"""
Pydantic models for the /ramsey endpoints and the report JSON format.
"""
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field

from app.core import config
from app.schemas.graph import GraphPayload, PosetPayload


class QueryPayload(BaseModel):
    """Clique target n and independence target m."""

    n: int = Field(..., description="Clique target", ge=1)
    m: int = Field(..., description="Independence target", ge=1)


class VerificationReportPayload(BaseModel):
    """Outcome of an exhaustive verification or search."""

    query: QueryPayload
    order: int = Field(..., description="Vertex/element count that was checked")
    enumerated: int = Field(..., description="Objects enumerated; partial for a search stopped at a counterexample")
    all_pass: bool = Field(..., description="True if every object had a clique or independent witness")
    counterexample: Optional[GraphPayload] = Field(None, description="First failing graph, if any")
    elapsed_ms: float = Field(..., description="Wall time (ms)")
    details: Dict[str, Any] = Field(default_factory=dict, description="Operation-specific outcomes")


class WitnessRequest(BaseModel):
    """Request payload for POST /ramsey/witness."""

    poset: PosetPayload
    n: int = Field(..., description="Clique target", ge=1)
    m: int = Field(..., description="Independence target", ge=1)
    subset: Optional[List[int]] = Field(None, description="Element subset; all elements if omitted")


class WitnessResponse(BaseModel):
    """Response from POST /ramsey/witness."""

    kind: Literal["clique", "independent"]
    vertices: List[int] = Field(..., description="Witness vertices")
    valid: bool = Field(..., description="Witness re-checked in the comparability graph")
    threshold: int = Field(..., description="(n-1)(m-1)+1")


class VerifyPoRequest(BaseModel):
    """Request payload for POST /ramsey/verify-po."""

    n: int = Field(..., ge=1)
    m: int = Field(..., ge=1)
    max_order: Optional[int] = Field(
        None, description="Lower the poset-order cap", ge=1, le=config.MAX_POSET_ORDER
    )


class VerifyConeRequest(BaseModel):
    """Request payload for POST /ramsey/verify-cone."""

    k: int = Field(..., description="Semi-cone modulus", ge=2)
    n: int = Field(..., ge=1)
    m: int = Field(..., ge=1)


class SearchRequest(BaseModel):
    """Request payload for POST /ramsey/search."""

    n: int = Field(..., ge=1)
    m: int = Field(..., ge=1)
    order: int = Field(..., description="Vertex count of the enumerated graphs", ge=1)
    max_order: Optional[int] = Field(
        None, description="Lower the graph-order cap", ge=1, le=config.MAX_GRAPH_ORDER
    )
