"""
Domain models for the ring-theoretic graph families.
"""
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd, prod
from typing import Dict, Tuple

import numpy as np

from app.core.errors import (
    DimensionMismatch,
    ImproperModulus,
    InvalidInput,
    NotCoprime,
    TooSmall,
)
from app.models.graph import Distance
from app.utils.bits import iter_bits, popcount
from app.utils.numbers import are_coprime, first_primes, is_proper_integer


@dataclass(frozen=True)
class PdgSpec:
    """A set of n >= 2 pairwise coprime integers, none of them 0 or a unit."""
    moduli: Tuple[int, ...]

    def __post_init__(self):
        if len(self.moduli) < 2:
            raise TooSmall(len(self.moduli), 2)
        for i, value in enumerate(self.moduli):
            if not is_proper_integer(value):
                raise ImproperModulus(i)
        for i in range(len(self.moduli)):
            for j in range(i + 1, len(self.moduli)):
                if not are_coprime(self.moduli[i], self.moduli[j]):
                    raise NotCoprime(i, j)

    @classmethod
    def from_primes(cls, n: int) -> "PdgSpec":
        return cls(tuple(first_primes(n)))

    @property
    def n(self) -> int:
        return len(self.moduli)

    @property
    def vertex_count(self) -> int:
        return 2 ** self.n - 2


@dataclass(frozen=True)
class PdgVertex:
    """A perfect divisor, identified by the index set of the moduli it multiplies."""
    index_set: int
    value: int

    @classmethod
    def of(cls, spec: PdgSpec, index_set: int) -> "PdgVertex":
        full = (1 << spec.n) - 1
        if index_set <= 0 or index_set >= full:
            raise InvalidInput(f"Index set {index_set:#b} is not a nonempty proper subset")
        return cls(index_set, prod(spec.moduli[i] for i in iter_bits(index_set)))

    @property
    def level(self) -> int:
        """|J|, the partition class P_k the vertex belongs to."""
        return popcount(self.index_set)

    @property
    def label(self) -> str:
        return "*".join(f"m{i + 1}" for i in iter_bits(self.index_set))


@dataclass(frozen=True)
class ZnElement:
    """A residue modulo n."""
    modulus: int
    value: int

    def __post_init__(self):
        if self.modulus < 2:
            raise InvalidInput(f"Modulus must be >= 2, got {self.modulus}")
        if not 0 <= self.value < self.modulus:
            raise InvalidInput(f"{self.value} is not a residue modulo {self.modulus}")

    @property
    def is_proper(self) -> bool:
        """Nonzero non-unit."""
        return self.value != 0 and gcd(self.value, self.modulus) > 1


def bareiss_determinant(entries: Tuple[Tuple[int, ...], ...]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    size = len(entries)
    a = [list(row) for row in entries]
    sign, previous = 1, 1
    for k in range(size - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // previous
        previous = a[k][k]
    return sign * a[size - 1][size - 1]


@dataclass(frozen=True)
class IntMatrix:
    """A square integer matrix of dimension >= 2 with an exact cached determinant."""
    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) < 2:
            raise InvalidInput(f"Matrix dimension must be >= 2, got {len(self.entries)}")
        if any(len(row) != len(self.entries) for row in self.entries):
            raise DimensionMismatch("Matrix must be square")

    @property
    def dimension(self) -> int:
        return len(self.entries)

    @cached_property
    def det(self) -> int:
        return bareiss_determinant(self.entries)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if other.dimension != self.dimension:
            raise DimensionMismatch(f"Cannot multiply {self.dimension}x{self.dimension} by {other.dimension}x{other.dimension}")
        product = np.array(self.entries, dtype=object) @ np.array(other.entries, dtype=object)
        return IntMatrix(tuple(tuple(int(x) for x in row) for row in product))


@dataclass(frozen=True)
class IdempotentMask:
    """An element of the Boolean ring Z_2^width; bit i holds coordinate i."""
    width: int
    mask: int

    def __post_init__(self):
        if self.width < 1:
            raise InvalidInput(f"Width must be >= 1, got {self.width}")
        if not 0 <= self.mask < (1 << self.width):
            raise InvalidInput(f"Mask {self.mask} does not fit in width {self.width}")

    def __mul__(self, other: "IdempotentMask") -> "IdempotentMask":
        return IdempotentMask(self.width, self.mask & other.mask)

    @property
    def is_idempotent(self) -> bool:
        return (self * self).mask == self.mask

    def divides(self, other: "IdempotentMask") -> bool:
        """a | b iff b = a*x for some x iff support(b) is inside support(a)."""
        return other.mask & ~self.mask == 0

    @property
    def label(self) -> str:
        return "".join("1" if (self.mask >> i) & 1 else "0" for i in range(self.width))


@dataclass(frozen=True)
class PdgProperties:
    """Closed-form structural properties of pdg(S) for |S| = n."""
    n: int
    vertex_count: int
    connected: bool
    diameter: Distance
    domination: int
    parts: int
    degree_by_level: Dict[int, int] = field(default_factory=dict)
    girth: Distance = Distance(None)
    planar: bool = False
