"""
API endpoints for witness extraction, class verification and general search.
"""
from fastapi import APIRouter

from app.core.dependencies import RamseyServiceDep
from app.graphs.io import poset_from_json
from app.models.ramsey import RamseyQuery
from app.schemas.ramsey import (
    SearchRequest,
    VerificationReportPayload,
    VerifyConeRequest,
    VerifyPoRequest,
    WitnessRequest,
    WitnessResponse,
)
from app.services.ramsey_service import format_report

router = APIRouter(prefix="/ramsey")


@router.post("/witness", response_model=WitnessResponse)
def extract_witness(request: WitnessRequest, ramsey_service: RamseyServiceDep):
    """Chain of n or antichain of m inside the subset, re-checked in the comparability graph."""
    poset = poset_from_json(request.poset.model_dump())
    return ramsey_service.witness(poset, RamseyQuery(request.n, request.m), request.subset)


@router.post("/verify-po", response_model=VerificationReportPayload)
def verify_po(request: VerifyPoRequest, ramsey_service: RamseyServiceDep):
    """Exhaustive check of the comparability-graph closed form over labeled posets."""
    report = ramsey_service.verify_po(RamseyQuery(request.n, request.m), request.max_order)
    return format_report(report)


@router.post("/verify-cone", response_model=VerificationReportPayload)
def verify_cone(request: VerifyConeRequest, ramsey_service: RamseyServiceDep):
    """Exhaustive residue-pattern check of the semi-cone formula."""
    report = ramsey_service.verify_cone(request.k, RamseyQuery(request.n, request.m))
    return format_report(report)


@router.post("/search", response_model=VerificationReportPayload)
def search_general(request: SearchRequest, ramsey_service: RamseyServiceDep):
    """Check every labeled graph of the given order; a counterexample is a normal outcome."""
    report = ramsey_service.search(RamseyQuery(request.n, request.m), request.order, request.max_order)
    return format_report(report)
