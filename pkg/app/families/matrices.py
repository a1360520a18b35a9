"""
Integer matrices labelled by determinant, and the graph of strict one-way
divisibility between their determinants.
"""
from itertools import combinations
from typing import List, Sequence, Tuple

import numpy as np

from app.core.errors import DegenerateQuery, DimensionMismatch, ImproperDeterminant, InvalidInput
from app.models.graph import Graph
from app.models.poset import Poset
from app.models.ramsey import RamseyQuery
from app.models.rings import IntMatrix
from app.order.poset import validate_poset
from app.utils.numbers import first_primes, is_proper_integer, strictly_divides

Blocks = Tuple[Tuple[int, ...], ...]


def matrix_with_det(j: int, d: int) -> IntMatrix:
    """diag(d, 1, ..., 1) of dimension j."""
    if j < 2:
        raise InvalidInput(f"Matrix dimension must be >= 2, got {j}")
    return IntMatrix(tuple(tuple(d if r == c == 0 else int(r == c) for c in range(j)) for r in range(j)))


def _checked_determinants(matrices: Sequence[IntMatrix]) -> List[int]:
    if matrices:
        dimension = matrices[0].dimension
        for i, matrix in enumerate(matrices):
            if matrix.dimension != dimension:
                raise DimensionMismatch(f"Matrix {i} is {matrix.dimension}x{matrix.dimension}, expected {dimension}x{dimension}")
    dets = []
    for i, matrix in enumerate(matrices):
        if not is_proper_integer(matrix.det):
            raise ImproperDeterminant(i, matrix.det)
        dets.append(matrix.det)
    return dets


def matrix_poset(matrices: Sequence[IntMatrix]) -> Poset:
    """A <= B iff A is B (same position) or det(A) || det(B)."""
    dets = _checked_determinants(matrices)
    if not dets:
        raise InvalidInput("Matrix list must be nonempty")
    leq = np.eye(len(dets), dtype=bool)
    for a, det_a in enumerate(dets):
        for b, det_b in enumerate(dets):
            if a != b and strictly_divides(det_a, det_b):
                leq[a, b] = True
    return validate_poset(leq)


def matrix_graph(matrices: Sequence[IntMatrix]) -> Graph:
    """
    Edge {A, B} iff det(A) || det(B) or det(B) || det(A).

    Raises:
        DimensionMismatch, ImproperDeterminant(index)
    """
    if not matrices:
        return Graph.empty(0)
    dets = _checked_determinants(matrices)
    edges = [
        (a, b)
        for a, b in combinations(range(len(dets)), 2)
        if strictly_divides(dets[a], dets[b]) or strictly_divides(dets[b], dets[a])
    ]
    return Graph.from_edges(len(dets), edges, [f"det={d}" for d in dets])


def matrix_extremal(q: RamseyQuery, j: int = 2) -> Tuple[List[IntMatrix], Blocks]:
    """
    With X_t = matrix_with_det(j, p_t) and q_i = X_1...X_{k_i}, k_i = (i-1)(m-1),
    block i is {q_i X_{k_i+t} : 1 <= t <= m-1}. Matrices are listed block by
    block and the blocks hold their positions.

    Raises:
        DegenerateQuery if n < 2 or m < 2
    """
    if q.n < 2 or q.m < 2:
        raise DegenerateQuery(q.n, q.m)
    w = (q.n - 1) * (q.m - 1)
    generators = [matrix_with_det(j, p) for p in first_primes(w)]
    identity = matrix_with_det(j, 1)

    matrices: List[IntMatrix] = []
    blocks = []
    for i in range(1, q.n):
        k_i = (i - 1) * (q.m - 1)
        prefix = identity
        for x in generators[:k_i]:
            prefix = prefix @ x
        start = len(matrices)
        for t in range(1, q.m):
            matrices.append(prefix @ generators[k_i + t - 1])
        blocks.append(tuple(range(start, len(matrices))))
    return matrices, tuple(blocks)
