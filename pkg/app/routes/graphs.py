"""
API endpoints: POST /graphs/generate and POST /graphs/analyze.
"""
from fastapi import APIRouter

from app.core.dependencies import AnalysisServiceDep, GeneratorServiceDep
from app.graphs.io import graph_from_payload, graph_to_payload
from app.schemas.graph import AnalyzeRequest, AnalyzeResponse, GenerateRequest, GenerateResponse
from app.services.generator_service import FamilyParams

router = APIRouter(prefix="/graphs")


@router.post("/generate", response_model=GenerateResponse)
def generate_graph(request: GenerateRequest, generator_service: GeneratorServiceDep):
    """
    Build a graph family by name.

    Extremal families also return their blocks A_1..A_{n-1} as vertex indices.
    """
    params = FamilyParams(
        n=request.n,
        m=request.m,
        width=request.width,
        k=request.k,
        lo=request.lo,
        hi=request.hi,
        moduli=tuple(request.moduli) if request.moduli else None,
        dimension=request.dimension,
    )
    generated = generator_service.generate(request.family, params)
    return GenerateResponse(
        family=generated.family,
        graph=graph_to_payload(generated.graph),
        blocks=generated.blocks,
    )


@router.post("/analyze", response_model=AnalyzeResponse)
def analyze_graph(request: AnalyzeRequest, analysis_service: AnalysisServiceDep):
    """Compute the requested invariants of a Graph JSON payload."""
    graph = graph_from_payload(request.graph)
    results = analysis_service.analyze(graph, request.invariants)
    return AnalyzeResponse(size=graph.size, edge_count=graph.edge_count, results=results)
