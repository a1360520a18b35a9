"""
Metrics service - turns collector snapshots into reports.
Used by GET /metrics and by the CLI `check` summary.
"""
from typing import Dict, List

import numpy as np

from app.core.metrics import MetricsCollector
from app.models.metrics import MetricsSnapshot


class MetricsService:
    """
    Service for computing metrics from raw samples.
    """

    def compute_latency_stats(self, samples: List[float]) -> Dict[str, float]:
        """Mean and 95th percentile in ms; zeros when there are no samples."""
        if not samples:
            return {"mean": 0.0, "p95": 0.0}
        values = np.asarray(samples, dtype=float)
        return {
            "mean": float(values.mean()),
            "p95": float(np.percentile(values, 95)),
        }

    def snapshot(self, collector: MetricsCollector) -> MetricsSnapshot:
        return MetricsSnapshot(
            total_requests=collector.total_requests,
            verification_runs=collector.verification_runs,
            verification_failures=collector.verification_failures,
            counterexamples=collector.counterexamples,
            request_latencies=list(collector.request_latencies),
            verification_latencies=list(collector.verification_latencies),
        )

    def create_metrics_report(self, snapshot: MetricsSnapshot) -> dict:
        """
        Flatten a snapshot into the /metrics report.

        Request latency covers HTTP handling; verification time covers each
        run or theorem claim, whichever front end triggered it.
        """
        requests = self.compute_latency_stats(snapshot.request_latencies)
        verifications = self.compute_latency_stats(snapshot.verification_latencies)
        return {
            "total_requests": snapshot.total_requests,
            "verification_runs": snapshot.verification_runs,
            "verification_failures": snapshot.verification_failures,
            "counterexamples": snapshot.counterexamples,
            "failure_rate": snapshot.failure_rate,
            "latency_ms_mean": requests["mean"],
            "latency_ms_p95": requests["p95"],
            "verification_ms_mean": verifications["mean"],
            "verification_ms_p95": verifications["p95"],
        }


# Singleton instance
_metrics_service: MetricsService = None


def get_metrics_service() -> MetricsService:
    """Get the global metrics service instance."""
    global _metrics_service
    if _metrics_service is None:
        _metrics_service = MetricsService()
    return _metrics_service
