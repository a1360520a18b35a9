"""
Metrics aggregation model.
"""
from dataclasses import dataclass, field
from typing import List


@dataclass
class MetricsSnapshot:
    """Point-in-time copy of the collector."""
    total_requests: int
    verification_runs: int
    verification_failures: int
    counterexamples: int
    request_latencies: List[float] = field(default_factory=list)
    verification_latencies: List[float] = field(default_factory=list)

    @property
    def failure_rate(self) -> float:
        """Fraction of verification runs or claims that did not pass."""
        if self.verification_runs == 0:
            return 0.0
        return self.verification_failures / self.verification_runs
