"""
Tests for the metrics collector and report.
"""
from app.core.metrics import MetricsCollector
from app.services.metrics_service import MetricsService


def test_report_from_collector():
    """Counters, failure rate and both latency series end up in the report."""
    collector = MetricsCollector()
    collector.record_request(10.0)
    collector.record_request(30.0)
    collector.record_verification(True, 5.0)
    collector.record_verification(False, 7.0, counterexample=True)

    service = MetricsService()
    report = service.create_metrics_report(service.snapshot(collector))
    assert report["total_requests"] == 2
    assert report["verification_runs"] == 2
    assert report["verification_failures"] == 1
    assert report["counterexamples"] == 1
    assert report["failure_rate"] == 0.5
    assert report["latency_ms_mean"] == 20.0
    assert report["verification_ms_mean"] == 6.0


def test_empty_collector_reports_zeros():
    """No samples means zero latency and zero failure rate."""
    service = MetricsService()
    report = service.create_metrics_report(service.snapshot(MetricsCollector()))
    assert report["failure_rate"] == 0.0
    assert report["latency_ms_p95"] == 0.0


def test_samples_are_bounded():
    """Only the most recent samples are kept; counters keep counting."""
    collector = MetricsCollector(max_samples=3)
    for latency in range(10):
        collector.record_request(float(latency))
    assert list(collector.request_latencies) == [7.0, 8.0, 9.0]
    assert collector.total_requests == 10
    collector.reset()
    assert collector.total_requests == 0 and not collector.request_latencies
