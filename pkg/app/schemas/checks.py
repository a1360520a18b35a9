"""
Pydantic models for theorem checks and system metrics.
"""
from typing import Any, Dict, List

from pydantic import BaseModel, Field


class ClaimPayload(BaseModel):
    """One checked claim."""

    theorem: str = Field(..., description="Theorem id the claim belongs to")
    claim: str = Field(..., description="Claim name")
    passed: bool
    elapsed_ms: float
    detail: Dict[str, Any] = Field(default_factory=dict, description="Computed vs expected values")


class CheckResponse(BaseModel):
    """Response from GET /checks/{theorem_id}."""

    theorem_id: str
    all_pass: bool
    claims: List[ClaimPayload]


class MetricsResponse(BaseModel):
    """Response from GET /metrics."""

    total_requests: int = Field(..., description="HTTP requests processed")
    verification_runs: int = Field(..., description="Verifications and checks run")
    verification_failures: int = Field(..., description="Runs that did not pass")
    counterexamples: int = Field(..., description="Runs that reported a counterexample graph")
    failure_rate: float = Field(..., description="Fraction of failed runs")
    latency_ms_mean: float = Field(..., description="Mean request latency (ms)")
    latency_ms_p95: float = Field(..., description="95th percentile request latency (ms)")
    verification_ms_mean: float = Field(..., description="Mean verification time (ms)")
    verification_ms_p95: float = Field(..., description="95th percentile verification time (ms)")
