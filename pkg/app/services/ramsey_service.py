"""
Ramsey service - witness extraction, class verification and general search.
Every verification run is counted in the metrics collector.
"""
from typing import Any, Dict, Iterable, Optional

from app.core.logging import get_logger
from app.core.metrics import MetricsCollector, get_metrics
from app.families.cone import verify_cone
from app.graphs.io import graph_to_payload
from app.models.cone import ConeSpec
from app.models.poset import Poset
from app.models.ramsey import RamseyQuery, VerificationReport
from app.order.poset import comparability_graph
from app.ramsey.engine import extract_witness, witness_is_valid
from app.ramsey.verification import general_ramsey_search, verify_po_class
from app.schemas.ramsey import QueryPayload, VerificationReportPayload, WitnessResponse

logger = get_logger(__name__)


def format_report(report: VerificationReport) -> Dict[str, Any]:
    """Report JSON: counterexample as Graph JSON (or null), elapsed time rounded to 0.01 ms."""
    payload = VerificationReportPayload(
        query=QueryPayload(n=report.query.n, m=report.query.m),
        order=report.order,
        enumerated=report.enumerated,
        all_pass=report.all_pass,
        counterexample=graph_to_payload(report.counterexample) if report.counterexample is not None else None,
        elapsed_ms=round(report.elapsed_ms, 2),
        details=report.details,
    )
    return payload.model_dump()


class RamseyService:
    """
    Service for the Ramsey operations shared by the CLI and the /ramsey routes.
    """

    def __init__(self, collector: Optional[MetricsCollector] = None):
        self.collector = collector or get_metrics()

    def _record(self, report: VerificationReport, label: str) -> VerificationReport:
        self.collector.record_verification(report.all_pass, report.elapsed_ms, report.counterexample is not None)
        if report.all_pass:
            logger.info(f"✅ {label} {report.query.description}: {report.enumerated} checked in {report.elapsed_ms:.0f} ms")
        else:
            logger.warning(f"❌ {label} {report.query.description}: failed at order {report.order}")
        return report

    def witness(self, poset: Poset, q: RamseyQuery, subset: Optional[Iterable[int]] = None) -> WitnessResponse:
        """
        Extract and re-check a witness; subset defaults to every element.

        Raises:
            SubsetTooSmall, EmptySubset, VertexOutOfRange
        """
        chosen = range(poset.size) if subset is None else list(subset)
        witness = extract_witness(poset, chosen, q)
        valid = witness_is_valid(comparability_graph(poset), witness, q)
        return WitnessResponse(
            kind=witness.kind,
            vertices=list(witness.vertices),
            valid=valid,
            threshold=q.threshold,
        )

    def verify_po(self, q: RamseyQuery, max_order: Optional[int] = None, workers: Optional[int] = None) -> VerificationReport:
        return self._record(verify_po_class(q, max_order, workers), "verify-po")

    def verify_cone(self, k: int, q: RamseyQuery, max_window: Optional[int] = None) -> VerificationReport:
        return self._record(verify_cone(ConeSpec(k), q, max_window), f"verify-cone k={k}")

    def search(
        self,
        q: RamseyQuery,
        order: int,
        max_order: Optional[int] = None,
        workers: Optional[int] = None,
    ) -> VerificationReport:
        """
        General-graph search. A counterexample is an expected outcome below the
        classical Ramsey number, so it is reported rather than raised.
        """
        return self._record(general_ramsey_search(q, order, max_order, workers), f"search-general order={order}")


# Singleton instance
_ramsey_service: RamseyService = None


def get_ramsey_service() -> RamseyService:
    """Get the global Ramsey service instance."""
    global _ramsey_service
    if _ramsey_service is None:
        _ramsey_service = RamseyService()
    return _ramsey_service
