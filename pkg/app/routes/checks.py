"""
API endpoint: GET /checks/{theorem_id}.
"""
from dataclasses import asdict
from typing import Optional

from fastapi import APIRouter

from app.core.dependencies import TheoremServiceDep
from app.models.checks import CheckOptions
from app.schemas.checks import CheckResponse, ClaimPayload

router = APIRouter(prefix="/checks")


@router.get("/{theorem_id}", response_model=CheckResponse)
def run_check(
    theorem_id: str,
    theorem_service: TheoremServiceDep,
    n: Optional[int] = None,
    k: Optional[int] = None,
):
    """
    Run one theorem id (or `all`) and return every claim.

    `n` narrows pdg-properties, `k` narrows cone-ramsey.
    """
    options = CheckOptions(ns=[n] if n is not None else None, ks=[k] if k is not None else None)
    reports = theorem_service.run(theorem_id, options)
    claims = [ClaimPayload(**asdict(claim)) for report in reports for claim in report.claims]
    return CheckResponse(
        theorem_id=theorem_id,
        all_pass=all(report.all_pass for report in reports),
        claims=claims,
    )
