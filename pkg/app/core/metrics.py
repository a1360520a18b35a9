"""
Counters for Ramsey verifications, theorem claims and HTTP traffic.
Request latencies and verification durations are kept apart; both are
bounded to the most recent samples.
"""
import time
from collections import deque
from typing import Deque

from fastapi import Request
from starlette.middleware.base import BaseHTTPMiddleware


class MetricsCollector:
    """
    Process-wide counters shared by the API and the CLI `check` command.
    """

    def __init__(self, max_samples: int = 1000):
        self.max_samples = max_samples
        self.request_latencies: Deque[float] = deque(maxlen=max_samples)
        self.verification_latencies: Deque[float] = deque(maxlen=max_samples)

        self.total_requests = 0
        self.verification_runs = 0
        self.verification_failures = 0
        self.counterexamples = 0

    def record_request(self, latency_ms: float):
        self.total_requests += 1
        self.request_latencies.append(latency_ms)

    def record_verification(self, passed: bool, elapsed_ms: float, counterexample: bool = False):
        """Count one verification run or theorem claim and keep its duration."""
        self.verification_runs += 1
        if not passed:
            self.verification_failures += 1
        if counterexample:
            self.counterexamples += 1
        self.verification_latencies.append(elapsed_ms)

    def reset(self):
        self.request_latencies.clear()
        self.verification_latencies.clear()
        self.total_requests = 0
        self.verification_runs = 0
        self.verification_failures = 0
        self.counterexamples = 0


# Global metrics instance
metrics = MetricsCollector()


class LatencyMiddleware(BaseHTTPMiddleware):
    """
    Times every request into the collector and echoes the figure back.
    """

    async def dispatch(self, request: Request, call_next):
        start_time = time.perf_counter()
        response = await call_next(request)
        latency_ms = (time.perf_counter() - start_time) * 1000

        metrics.record_request(latency_ms)

        response.headers["X-Latency-Ms"] = f"{latency_ms:.2f}"
        return response


def get_metrics() -> MetricsCollector:
    """Get the global metrics collector."""
    return metrics
