"""
API endpoint: GET /metrics.
"""
from fastapi import APIRouter

from app.core.dependencies import MetricsCollectorDep, MetricsServiceDep
from app.schemas.checks import MetricsResponse

router = APIRouter()


@router.get("/metrics", response_model=MetricsResponse)
async def get_system_metrics(
    metrics_service: MetricsServiceDep,
    metrics_collector: MetricsCollectorDep
):
    """
    Return system monitoring metrics.

    Metrics:
    - Request and verification counts
    - Failure rate of verification runs
    - Request latency and verification time (mean, p95)
    """
    snapshot = metrics_service.snapshot(metrics_collector)
    report = metrics_service.create_metrics_report(snapshot)
    return MetricsResponse(**report)
