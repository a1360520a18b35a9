"""
Perfect divisor graphs pdg(S) of a pairwise coprime set S = {m_1, ..., m_n}.

Vertices are the nonempty proper index sets J (bitmasks), vertex index J - 1;
the divisor prod(m_j for j in J) is only a label. Containment of index sets
is the same relation as divisibility of the products.
"""
from typing import List, Sequence, Tuple

import numpy as np

from app.core.errors import DegenerateQuery, TooSmall
from app.graphs.planarity import KuratowskiCertificate, from_bipartition
from app.models.graph import INFINITE, Distance, Graph
from app.models.poset import Poset
from app.models.ramsey import RamseyQuery
from app.models.rings import PdgProperties, PdgSpec, PdgVertex
from app.order.poset import validate_poset
from app.utils.bits import full_mask

Blocks = Tuple[Tuple[int, ...], ...]


def pdg_index(index_set: int) -> int:
    return index_set - 1


def pdg_vertices(spec: PdgSpec) -> List[PdgVertex]:
    return [PdgVertex.of(spec, mask) for mask in range(1, full_mask(spec.n))]


def pdg_graph(spec: PdgSpec) -> Graph:
    """Edge iff one index set is a proper subset of the other."""
    full = full_mask(spec.n)
    adjacency = []
    for mask in range(1, full):
        nbrs = 0
        sub = (mask - 1) & mask
        while sub:
            nbrs |= 1 << pdg_index(sub)
            sub = (sub - 1) & mask
        rest = full & ~mask
        extra = (rest - 1) & rest
        while extra:
            nbrs |= 1 << pdg_index(mask | extra)
            extra = (extra - 1) & rest
        adjacency.append(nbrs)
    labels = tuple(v.label for v in pdg_vertices(spec))
    return Graph(full - 1, tuple(adjacency), labels)


def pdg_poset(spec: PdgSpec) -> Poset:
    """The divisibility order on the perfect divisors, computed on the integers."""
    values = np.array([v.value for v in pdg_vertices(spec)], dtype=object)
    leq = np.array(values[None, :] % values[:, None] == 0, dtype=bool)
    return validate_poset(leq)


def pdg_subposet(index_sets: Sequence[int]) -> Poset:
    """Containment order restricted to the given index sets, in the given order."""
    masks = np.array(index_sets, dtype=np.int64)
    leq = (masks[:, None] & ~masks[None, :]) == 0
    return validate_poset(leq)


def pdg_expected_properties(n: int) -> PdgProperties:
    """Closed-form structure of pdg(S) for |S| = n."""
    if n < 2:
        raise TooSmall(n, 2)
    if n == 2:
        girth = INFINITE
    elif n == 3:
        girth = Distance(6)
    else:
        girth = Distance(3)
    return PdgProperties(
        n=n,
        vertex_count=2 ** n - 2,
        connected=n >= 3,
        diameter=Distance(3) if n >= 3 else INFINITE,
        domination=2,
        parts=n - 1,
        degree_by_level={k: 2 ** k + 2 ** (n - k) - 4 for k in range(1, n)},
        girth=girth,
        planar=n <= 4,
    )


def pdg_size_classes(n: int) -> List[List[int]]:
    """P_k for k = 1..n-1: vertex indices whose index set has k elements."""
    classes: List[List[int]] = [[] for _ in range(n - 1)]
    for mask in range(1, full_mask(n)):
        classes[bin(mask).count("1") - 1].append(pdg_index(mask))
    return classes


def pdg_k33_certificate(n: int) -> Tuple[Tuple[int, int, int], Tuple[int, int, int]]:
    """
    ({m1m2m3, m1m2m4, m1m2m5}, {m1, m2, m1m2}) as index-set masks; each of the
    left products is divisible by every right one.

    Raises:
        TooSmall for n < 5
    """
    if n < 5:
        raise TooSmall(n, 5)
    left = (0b00111, 0b01011, 0b10011)
    right = (0b001, 0b010, 0b011)
    return left, right


def pdg_k33_kuratowski(n: int) -> KuratowskiCertificate:
    left, right = pdg_k33_certificate(n)
    return from_bipartition([pdg_index(a) for a in left], [pdg_index(b) for b in right])


def pdg_extremal(q: RamseyQuery) -> Tuple[PdgSpec, Blocks]:
    """
    Blocks A_1..A_{n-1} of index sets inducing a complete (n-1)-partite graph
    with parts of m-1. With w = (n-1)(m-1) and k_i = (i-1)(m-1), block i is
    {p_1...p_{k_i} * p_{k_i+j+1} : j < m-1}. S is the first w+1 primes so the
    largest product stays a proper divisor.

    Raises:
        DegenerateQuery if n < 2 or m < 2
    """
    if q.n < 2 or q.m < 2:
        raise DegenerateQuery(q.n, q.m)
    w = (q.n - 1) * (q.m - 1)
    spec = PdgSpec.from_primes(w + 1)
    blocks = []
    for i in range(1, q.n):
        k_i = (i - 1) * (q.m - 1)
        prefix = full_mask(k_i)
        blocks.append(tuple(prefix | (1 << (k_i + j)) for j in range(q.m - 1)))
    return spec, tuple(blocks)


def blocks_union(blocks: Blocks) -> List[int]:
    return sorted({v for block in blocks for v in block})


def extremal_outside(spec: PdgSpec, blocks: Blocks) -> List[int]:
    """Index sets of pdg(S) that are not in any block, ascending."""
    chosen = set(blocks_union(blocks))
    return [mask for mask in range(1, full_mask(spec.n)) if mask not in chosen]
