"""
Theorem-check outcomes.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence


@dataclass
class ClaimResult:
    """One checked claim: computed vs expected values go in `detail`."""
    theorem: str
    claim: str
    passed: bool
    elapsed_ms: float
    detail: Dict[str, Any] = field(default_factory=dict)


@dataclass
class TheoremReport:
    theorem_id: str
    claims: List[ClaimResult] = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        return all(claim.passed for claim in self.claims)

    @property
    def failed(self) -> List[ClaimResult]:
        return [claim for claim in self.claims if not claim.passed]


@dataclass
class CheckOptions:
    """
    Knobs for a theorem check. None means the configured or built-in default;
    ns and ks narrow the sweeps that take an n or k.
    """
    ns: Optional[Sequence[int]] = None
    ks: Optional[Sequence[int]] = None
    max_poset_order: Optional[int] = None
    max_graph_order: Optional[int] = None
    workers: Optional[int] = None
    max_product: int = 12
    fuzz_samples: Optional[int] = None
    fuzz_max_size: Optional[int] = None
    seed: Optional[int] = None
