"""
Domain models for the k-positive semi-cone of Z.
"""
from dataclasses import dataclass
from typing import Optional

from app.core.errors import InvalidInput


@dataclass(frozen=True)
class ConeSpec:
    """P_k = {0, k, 2k, ...} for a modulus k >= 2."""
    k: int

    def __post_init__(self):
        if self.k < 2:
            raise InvalidInput(f"Cone modulus must be >= 2, got {self.k}")


@dataclass(frozen=True)
class Window:
    """The integers lo..hi (inclusive), a finite view of Z."""
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise InvalidInput(f"Empty window [{self.lo}, {self.hi}]")

    @property
    def width(self) -> int:
        return self.hi - self.lo + 1

    def shifted(self, offset: int) -> "Window":
        return Window(self.lo + offset, self.hi + offset)


@dataclass(frozen=True)
class PkMembership:
    """Membership predicate for P_k; a plain class so it pickles across workers."""
    k: int

    def __call__(self, x: int) -> bool:
        return x >= 0 and x % self.k == 0


@dataclass(frozen=True)
class AxiomReport:
    """Semi-cone axioms checked on a finite sample."""
    intersect_ok: bool
    add_closed: bool
    mul_closed: bool
    cone_witness: Optional[int]
    intersect_violation: Optional[int] = None

    @property
    def is_semicone(self) -> bool:
        return self.intersect_ok and self.add_closed and self.mul_closed
