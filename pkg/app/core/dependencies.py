"""
FastAPI dependency injection utilities.
Provides clean access to services and the metrics collector.
"""
from typing import Annotated

from fastapi import Depends

from app.core.metrics import MetricsCollector, get_metrics
from app.services.analysis_service import AnalysisService, get_analysis_service
from app.services.generator_service import GeneratorService, get_generator_service
from app.services.metrics_service import MetricsService, get_metrics_service
from app.services.ramsey_service import RamseyService, get_ramsey_service
from app.services.theorem_service import TheoremService, get_theorem_service

# Type aliases for cleaner endpoint signatures
GeneratorServiceDep = Annotated[GeneratorService, Depends(get_generator_service)]
AnalysisServiceDep = Annotated[AnalysisService, Depends(get_analysis_service)]
RamseyServiceDep = Annotated[RamseyService, Depends(get_ramsey_service)]
TheoremServiceDep = Annotated[TheoremService, Depends(get_theorem_service)]
MetricsServiceDep = Annotated[MetricsService, Depends(get_metrics_service)]
MetricsCollectorDep = Annotated[MetricsCollector, Depends(get_metrics)]
