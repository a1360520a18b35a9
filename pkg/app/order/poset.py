"""
Poset validation, comparability graphs, acyclic orientation and Mirsky levels.
"""
import heapq
from typing import Dict, Iterable, List, Optional, Sequence

import numpy as np

from app.core.errors import (
    CyclicInput,
    EmptyPoset,
    EmptySubset,
    LevelOutOfRange,
    NotAntisymmetric,
    NotReflexive,
    NotSquare,
    NotTransitive,
    VertexOutOfRange,
)
from app.models.graph import Graph
from app.models.poset import MirskyLevels, OrientedGraph, Poset
from app.utils.bits import iter_bits, mask_of, popcount


def validate_poset(raw) -> Poset:
    """
    Validate a boolean relation matrix against the order axioms.

    Args:
        raw: square boolean matrix (nested lists or numpy array), raw[a][b] iff a <= b

    Returns:
        The validated Poset

    Raises:
        NotSquare, EmptyPoset, NotReflexive, NotAntisymmetric, NotTransitive
    """
    if isinstance(raw, (list, tuple)) and all(isinstance(row, (list, tuple)) for row in raw):
        ragged = next((row for row in raw if len(row) != len(raw)), None)
        if ragged is not None:
            raise NotSquare(len(raw), len(ragged))
    leq = np.array(raw, dtype=bool, copy=True)
    if leq.size == 0:
        raise EmptyPoset()
    if leq.ndim != 2 or leq.shape[0] != leq.shape[1]:
        rows = leq.shape[0] if leq.ndim >= 1 else 0
        cols = leq.shape[1] if leq.ndim == 2 else 0
        raise NotSquare(rows, cols)
    size = leq.shape[0]

    diagonal = np.diag(leq)
    if not diagonal.all():
        raise NotReflexive(int(np.argmin(diagonal)))

    both = leq & leq.T & ~np.eye(size, dtype=bool)
    if both.any():
        a, b = (int(x) for x in np.argwhere(both)[0])
        raise NotAntisymmetric(a, b)

    as_int = leq.astype(np.int64)
    composed = (as_int @ as_int) > 0
    missing = composed & ~leq
    if missing.any():
        a, c = (int(x) for x in np.argwhere(missing)[0])
        b = int(np.argmax(leq[a, :] & leq[:, c]))
        raise NotTransitive(a, b, c)

    return Poset(size, leq)


def poset_from_down_sets(down: Sequence[int]) -> Poset:
    """Build a Poset from strict down-set bitmasks (trusted, e.g. from the enumerator)."""
    size = len(down)
    leq = np.eye(size, dtype=bool)
    for a, mask in enumerate(down):
        for b in iter_bits(mask):
            leq[b, a] = True
    return Poset(size, leq)


def comparability_graph(p: Poset, labels: Optional[Sequence[str]] = None) -> Graph:
    """Edge {a, b} iff a != b and a, b are comparable."""
    adjacency = tuple(p.down[a] | p.up[a] for a in range(p.size))
    return Graph(p.size, adjacency, tuple(labels) if labels is not None else None)


def orient(p: Poset) -> OrientedGraph:
    """Arcs (a, b) for every strict relation a < b."""
    arcs = frozenset((a, b) for b in range(p.size) for a in iter_bits(p.down[b]))
    return OrientedGraph(p.size, arcs)


def subset_mask(size: int, subset: Iterable[int]) -> int:
    vertices = list(subset)
    if not vertices:
        raise EmptySubset()
    for v in vertices:
        if not 0 <= v < size:
            raise VertexOutOfRange(v, size)
    return mask_of(vertices)


def levels_from_predecessors(preds: Sequence[int], subset_mask: int) -> Dict[int, int]:
    """
    Longest-path level of every vertex in subset_mask, by Kahn's algorithm
    on the sub-digraph induced by the subset (smallest ready vertex first).
    """
    local = {v: preds[v] & subset_mask for v in iter_bits(subset_mask)}
    indegree = {v: popcount(mask) for v, mask in local.items()}
    succs: Dict[int, List[int]] = {v: [] for v in local}
    for v, mask in local.items():
        for u in iter_bits(mask):
            succs[u].append(v)

    ready = [v for v, deg in indegree.items() if deg == 0]
    heapq.heapify(ready)
    level: Dict[int, int] = {}
    while ready:
        v = heapq.heappop(ready)
        level[v] = max((level[u] + 1 for u in iter_bits(local[v])), default=0)
        for w in succs[v]:
            indegree[w] -= 1
            if indegree[w] == 0:
                heapq.heappush(ready, w)

    if len(level) != len(local):
        raise CyclicInput(tuple(sorted(set(local) - set(level))))
    return level


def poset_levels(down: Sequence[int], subset_mask: int) -> Dict[int, int]:
    """
    Mirsky levels for a transitive strict order given by down-sets.
    Sorting by down-set size is a topological order, so no queue is needed.
    """
    local = {v: down[v] & subset_mask for v in iter_bits(subset_mask)}
    level: Dict[int, int] = {}
    for v in sorted(local, key=lambda x: (popcount(local[x]), x)):
        level[v] = max((level[u] + 1 for u in iter_bits(local[v])), default=0)
    return level


def mirsky_levels(g: OrientedGraph, subset: Iterable[int]) -> MirskyLevels:
    """
    Level of each subset vertex = length of the longest directed path ending
    there inside the induced sub-digraph.

    Raises:
        EmptySubset, VertexOutOfRange, CyclicInput
    """
    mask = subset_mask(g.size, subset)
    level = levels_from_predecessors(g.in_masks, mask)
    return MirskyLevels(level=level, max_level=max(level.values()), in_masks=g.in_masks)


def chain_from_levels(preds: Sequence[int], level: Dict[int, int], subset_mask: int) -> List[int]:
    """
    Walk down from the smallest-index vertex on the top level, always taking the
    smallest-index predecessor one level lower. Returns the chain bottom-up.
    """
    top = max(level.values())
    current = min(v for v, lv in level.items() if lv == top)
    chain = [current]
    while level[current] > 0:
        below = level[current] - 1
        current = min(u for u in iter_bits(preds[current] & subset_mask) if level[u] == below)
        chain.append(current)
    chain.reverse()
    return chain


def longest_chain(p: Poset, subset: Iterable[int]) -> List[int]:
    """
    A maximum-length chain inside the subset, bottom element first.
    Its length is max_level + 1, the clique number of the induced comparability graph.
    """
    mask = subset_mask(p.size, subset)
    level = poset_levels(p.down, mask)
    return chain_from_levels(p.down, level, mask)


def level_antichain(levels: MirskyLevels, target_level: int) -> List[int]:
    """All vertices on one level; they are pairwise incomparable."""
    if not 0 <= target_level <= levels.max_level:
        raise LevelOutOfRange(target_level, levels.max_level)
    return levels.vertices_at(target_level)
