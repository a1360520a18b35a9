"""
Class Ramsey numbers for comparability graphs and constructive witnesses.

Any (n-1)(m-1)+1 elements of a poset contain a chain of n or an antichain
of m: if no Mirsky level reaches n-1 there are at most n-1 levels, so one
level holds at least m elements.
"""
from itertools import combinations
from typing import Callable, Iterable, Sequence, Tuple

import numpy as np

from app.core.errors import DegenerateQuery, SubsetTooSmall
from app.graphs.invariants import is_clique, is_independent_set
from app.models.graph import Graph
from app.models.poset import Poset
from app.models.ramsey import ExtremalPartition, RamseyQuery, RamseyWitness
from app.order.poset import chain_from_levels, comparability_graph, poset_levels, subset_mask, validate_poset
from app.utils.bits import full_mask, popcount


def ramsey_po(q: RamseyQuery) -> int:
    """(n-1)(m-1)+1, symmetric in n and m."""
    return q.threshold


def witness_from_down_sets(
    down: Sequence[int],
    subset_mask: int,
    n: int,
    m: int,
) -> RamseyWitness:
    """
    Witness extraction on strict down-set masks, which are exactly the
    in-neighbor masks of the acyclic orientation. The chain branch is tried
    first; otherwise the first level with m vertices gives its first m by index.
    """
    level = poset_levels(down, subset_mask)
    if max(level.values()) >= n - 1:
        return RamseyWitness.clique(chain_from_levels(down, level, subset_mask)[:n])
    by_level = {}
    for v in sorted(level):
        by_level.setdefault(level[v], []).append(v)
    for lv in sorted(by_level):
        if len(by_level[lv]) >= m:
            return RamseyWitness.independent(by_level[lv][:m])
    raise AssertionError("pigeonhole bound violated; the relation is not a partial order")


def extract_witness(p: Poset, subset: Iterable[int], q: RamseyQuery) -> RamseyWitness:
    """
    A clique of exactly n or an independent set of exactly m inside the subset.

    Raises:
        EmptySubset, VertexOutOfRange, SubsetTooSmall
    """
    mask = subset_mask(p.size, subset)
    size = popcount(mask)
    if size < q.threshold:
        raise SubsetTooSmall(size, q.threshold)
    return witness_from_down_sets(p.down, mask, q.n, q.m)


def witness_is_valid(g: Graph, witness: RamseyWitness, q: RamseyQuery) -> bool:
    """Checks the witness against the graph itself, not against the poset it came from."""
    if witness.is_clique:
        return len(witness.vertices) == q.n and is_clique(g, witness.vertices)
    return len(witness.vertices) == q.m and is_independent_set(g, witness.vertices)


def extremal_po_graph(q: RamseyQuery) -> Tuple[Poset, Graph, ExtremalPartition]:
    """
    n-1 blocks of m-1 elements, a below b iff block(a) < block(b).
    The comparability graph is complete (n-1)-partite with omega = n-1, alpha = m-1.

    Raises:
        DegenerateQuery if n < 2 or m < 2
    """
    if q.n < 2 or q.m < 2:
        raise DegenerateQuery(q.n, q.m)
    width = q.m - 1
    size = (q.n - 1) * width
    block = np.arange(size) // width
    leq = (block[:, None] < block[None, :]) | np.eye(size, dtype=bool)
    poset = validate_poset(leq)
    labels = [f"A{v // width + 1}.{v % width + 1}" for v in range(size)]
    graph = comparability_graph(poset, labels)
    blocks = tuple(tuple(range(i * width, (i + 1) * width)) for i in range(q.n - 1))
    return poset, graph, ExtremalPartition(q.n, q.m, blocks)


def augmented_witness(
    elements: Sequence[int],
    extra: int,
    below: Callable[[int, int], bool],
    q: RamseyQuery,
) -> Tuple[RamseyWitness, bool]:
    """
    Witness extraction on an extremal family plus one more element, where
    below(a, b) is the strict order. Witness vertices are positions in
    elements + [extra]; validity is re-checked pairwise through `below`.

    Raises:
        SubsetTooSmall when fewer than (n-1)(m-1)+1 elements are given
    """
    items = list(elements) + [extra]
    if len(items) < q.threshold:
        raise SubsetTooSmall(len(items), q.threshold)
    down = [
        sum(1 << i for i, a in enumerate(items) if i != j and below(a, b))
        for j, b in enumerate(items)
    ]
    witness = witness_from_down_sets(down, full_mask(len(items)), q.n, q.m)
    comparable = [
        below(items[a], items[b]) or below(items[b], items[a])
        for a, b in combinations(witness.vertices, 2)
    ]
    if witness.is_clique:
        valid = len(witness.vertices) == q.n and all(comparable)
    else:
        valid = len(witness.vertices) == q.m and not any(comparable)
    return witness, valid
