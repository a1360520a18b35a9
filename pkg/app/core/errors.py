"""
Domain errors.
Every failure the toolkit reports is a subclass of RamseyToolkitError so the
CLI and the HTTP layer can map them to exit codes / status codes in one place.
"""
from typing import Tuple


class RamseyToolkitError(Exception):
    """Base class for all toolkit errors."""


class InvalidInput(RamseyToolkitError, ValueError):
    """The caller supplied something the operation cannot accept."""


class LimitExceeded(RamseyToolkitError):
    """An exact or exhaustive computation would exceed its configured cap."""

    def __init__(self, what: str, value: int, cap: int):
        self.what = what
        self.value = value
        self.cap = cap
        super().__init__(f"{what} = {value} exceeds the configured cap {cap}")


# --- posets -----------------------------------------------------------------

class NotSquare(InvalidInput):
    def __init__(self, rows: int, cols: int):
        self.shape = (rows, cols)
        super().__init__(f"Relation matrix must be square, got {rows}x{cols}")


class EmptyPoset(InvalidInput):
    def __init__(self):
        super().__init__("Posets must have at least one element")


class NotReflexive(InvalidInput):
    def __init__(self, a: int):
        self.element = a
        super().__init__(f"Relation is not reflexive: leq[{a}][{a}] is false")


class NotAntisymmetric(InvalidInput):
    def __init__(self, a: int, b: int):
        self.pair = (a, b)
        super().__init__(f"Relation is not antisymmetric: {a} <= {b} and {b} <= {a}")


class NotTransitive(InvalidInput):
    def __init__(self, a: int, b: int, c: int):
        self.triple = (a, b, c)
        super().__init__(f"Relation is not transitive: {a} <= {b} <= {c} but not {a} <= {c}")


class CyclicInput(InvalidInput):
    def __init__(self, remaining: Tuple[int, ...]):
        self.remaining = remaining
        super().__init__(f"Oriented graph has a directed cycle among {list(remaining)}")


class EmptySubset(InvalidInput):
    def __init__(self):
        super().__init__("Vertex subset must be nonempty")


class LevelOutOfRange(InvalidInput):
    def __init__(self, level: int, max_level: int):
        self.level = level
        self.max_level = max_level
        super().__init__(f"Level {level} outside [0, {max_level}]")


# --- graphs -----------------------------------------------------------------

class InvalidGraph(InvalidInput):
    """Adjacency is not symmetric/irreflexive or labels do not fit."""


class VertexOutOfRange(InvalidInput):
    def __init__(self, vertex: int, size: int):
        self.vertex = vertex
        self.size = size
        super().__init__(f"Vertex {vertex} outside [0, {size})")


class EmptyGraph(InvalidInput):
    def __init__(self, operation: str):
        self.operation = operation
        super().__init__(f"{operation} is undefined on the empty graph")


class SizeLimitExceeded(LimitExceeded):
    def __init__(self, size: int, cap: int):
        super().__init__("graph size", size, cap)


# --- Ramsey queries ---------------------------------------------------------

class InvalidQuery(InvalidInput):
    def __init__(self, n: int, m: int):
        self.n = n
        self.m = m
        super().__init__(f"Ramsey query needs n, m >= 1, got ({n}, {m})")


class DegenerateQuery(InvalidInput):
    def __init__(self, n: int, m: int):
        self.n = n
        self.m = m
        super().__init__(f"Extremal construction needs n, m >= 2, got ({n}, {m})")


class SubsetTooSmall(InvalidInput):
    def __init__(self, size: int, required: int):
        self.size = size
        self.required = required
        super().__init__(f"Subset has {size} vertices, pigeonhole needs {required}")


class CapExceeded(LimitExceeded):
    pass


# --- ring and cone families -------------------------------------------------

class NotCoprime(InvalidInput):
    def __init__(self, i: int, j: int):
        self.pair = (i, j)
        super().__init__(f"Moduli {i} and {j} are not coprime")


class ImproperModulus(InvalidInput):
    def __init__(self, i: int):
        self.index = i
        super().__init__(f"Modulus {i} is zero or a unit")


class TooSmall(InvalidInput):
    def __init__(self, n: int, minimum: int):
        self.n = n
        self.minimum = minimum
        super().__init__(f"Needs n >= {minimum}, got {n}")


class ModulusMismatch(InvalidInput):
    def __init__(self, left: int, right: int):
        super().__init__(f"Elements live in Z_{left} and Z_{right}")


class NoProperElements(InvalidInput):
    def __init__(self, n: int):
        self.n = n
        super().__init__(f"Z_{n} has no proper (nonzero non-unit) elements")


class NoNontrivialIdeals(InvalidInput):
    def __init__(self, n: int):
        self.n = n
        super().__init__(f"Z_{n} has no non-trivial ideals")


class ImproperDeterminant(InvalidInput):
    def __init__(self, index: int, det: int):
        self.index = index
        self.det = det
        super().__init__(f"Matrix {index} has determinant {det}, which is not proper")


class DimensionMismatch(InvalidInput):
    """Matrices of different dimensions were mixed."""


class WidthLimitExceeded(LimitExceeded):
    def __init__(self, width: int, cap: int):
        super().__init__("idempotent width", width, cap)


# --- front ends -------------------------------------------------------------

class UnknownFamily(InvalidInput):
    def __init__(self, family: str):
        self.family = family
        super().__init__(f"Unknown graph family: {family}")


class UnknownInvariant(InvalidInput):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"Unknown invariant: {name}")


class UnknownTheoremId(InvalidInput):
    def __init__(self, theorem_id: str):
        self.theorem_id = theorem_id
        super().__init__(f"Unknown theorem id: {theorem_id}")
