"""
Graph invariants over bitset adjacency. Connectivity, components, diameter
and complement go through networkx.

Exact NP-hard invariants (clique, independence, domination) refuse graphs
above config.EXACT_SEARCH_CAP instead of approximating.
"""
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx

from app.core import config
from app.core.errors import EmptyGraph, SizeLimitExceeded
from app.graphs.io import from_networkx, to_networkx
from app.models.graph import INFINITE, Distance, Graph
from app.utils.bits import full_mask, iter_bits, lowest_bit, mask_of, popcount


def _check_cap(g: Graph, cap: Optional[int]) -> None:
    limit = config.EXACT_SEARCH_CAP if cap is None else cap
    if g.size > limit:
        raise SizeLimitExceeded(g.size, limit)


def _require_vertices(g: Graph, operation: str) -> None:
    if g.size == 0:
        raise EmptyGraph(operation)


def complement(g: Graph) -> Graph:
    return from_networkx(nx.complement(to_networkx(g)), g.labels)


def induced_subgraph(g: Graph, subset: Iterable[int]) -> Graph:
    """
    Subgraph on the given vertices, reindexed densely in increasing order.

    Raises:
        VertexOutOfRange
    """
    vertices = sorted(set(subset))
    for v in vertices:
        g.check_vertex(v)
    position = {v: i for i, v in enumerate(vertices)}
    chosen = mask_of(vertices)
    adjacency = tuple(
        mask_of(position[u] for u in iter_bits(g.adjacency[v] & chosen)) for v in vertices
    )
    labels = tuple(g.labels[v] for v in vertices) if g.labels is not None else None
    return Graph(len(vertices), adjacency, labels)


def is_clique(g: Graph, vertices: Sequence[int]) -> bool:
    """Pairwise adjacent and duplicate-free."""
    chosen = mask_of(vertices)
    if popcount(chosen) != len(vertices):
        return False
    return all(chosen & ~(1 << v) & ~g.adjacency[v] == 0 for v in vertices)


def is_independent_set(g: Graph, vertices: Sequence[int]) -> bool:
    """Pairwise non-adjacent and duplicate-free."""
    chosen = mask_of(vertices)
    if popcount(chosen) != len(vertices):
        return False
    return all(g.adjacency[v] & chosen == 0 for v in vertices)


# --- maximum clique ---------------------------------------------------------

def _color_sort(adjacency: Tuple[int, ...], candidates: int) -> Tuple[List[int], List[int]]:
    """Greedy sequential coloring; returns vertices with non-decreasing color bounds."""
    order: List[int] = []
    bounds: List[int] = []
    uncolored = candidates
    color = 0
    while uncolored:
        color += 1
        available = uncolored
        while available:
            v = lowest_bit(available)
            available &= ~adjacency[v] & ~(1 << v)
            uncolored &= ~(1 << v)
            order.append(v)
            bounds.append(color)
    return order, bounds


def max_clique(g: Graph, cap: Optional[int] = None) -> List[int]:
    """
    A maximum clique, by branch and bound with a greedy-coloring bound.

    Returns:
        Sorted vertex list; empty for the empty graph

    Raises:
        SizeLimitExceeded above the exact-search cap
    """
    _check_cap(g, cap)
    best: List[int] = []

    def expand(current: List[int], candidates: int) -> None:
        nonlocal best
        order, bounds = _color_sort(g.adjacency, candidates)
        for v, bound in zip(reversed(order), reversed(bounds)):
            if len(current) + bound <= len(best):
                return
            grown = current + [v]
            if len(grown) > len(best):
                best = grown
            remaining = candidates & g.adjacency[v]
            if remaining:
                expand(grown, remaining)
            candidates &= ~(1 << v)

    expand([], full_mask(g.size))
    return sorted(best)


def clique_number(g: Graph, cap: Optional[int] = None) -> int:
    return len(max_clique(g, cap))


def max_independent_set(g: Graph, cap: Optional[int] = None) -> List[int]:
    return max_clique(complement(g), cap)


def independence_number(g: Graph, cap: Optional[int] = None) -> int:
    """α(g) = ω(complement of g)."""
    return len(max_independent_set(g, cap))


# --- distances --------------------------------------------------------------

def connected_components(g: Graph) -> List[List[int]]:
    """Components in order of their smallest vertex."""
    components = (sorted(c) for c in nx.connected_components(to_networkx(g)))
    return sorted(components, key=lambda c: c[0])


def is_connected(g: Graph) -> bool:
    _require_vertices(g, "is_connected")
    return nx.is_connected(to_networkx(g))


def diameter(g: Graph) -> Distance:
    """Largest shortest-path distance; infinite when disconnected."""
    _require_vertices(g, "diameter")
    nx_graph = to_networkx(g)
    if not nx.is_connected(nx_graph):
        return INFINITE
    return Distance(nx.diameter(nx_graph))


def girth(g: Graph) -> Distance:
    """
    Shortest cycle length by BFS from every vertex; a non-tree edge met at
    depths d1, d2 closes a cycle of length at most d1 + d2 + 1, and the
    minimum over all roots is exact.
    """
    best: Optional[int] = None
    for source in range(g.size):
        depth = {source: 0}
        parent = {source: -1}
        queue = [source]
        head = 0
        while head < len(queue):
            current = queue[head]
            head += 1
            if best is not None and 2 * depth[current] + 1 >= best:
                break
            for nbr in iter_bits(g.adjacency[current]):
                if nbr not in depth:
                    depth[nbr] = depth[current] + 1
                    parent[nbr] = current
                    queue.append(nbr)
                elif parent[current] != nbr:
                    length = depth[current] + depth[nbr] + 1
                    if best is None or length < best:
                        best = length
        if best == 3:
            break
    return Distance(best)


# --- domination -------------------------------------------------------------

def minimum_dominating_set(g: Graph, cap: Optional[int] = None) -> List[int]:
    """
    A minimum dominating set by iterative deepening on its size. Each level
    branches on the closed neighborhood of the lowest undominated vertex and
    prunes when the remaining picks cannot cover what is left.

    Raises:
        EmptyGraph, SizeLimitExceeded
    """
    _require_vertices(g, "domination_number")
    _check_cap(g, cap)
    closed = [nbrs | (1 << v) for v, nbrs in enumerate(g.adjacency)]
    widest = max(popcount(mask) for mask in closed)

    def search(undominated: int, picks_left: int, chosen: List[int]) -> Optional[List[int]]:
        if not undominated:
            return chosen
        if picks_left == 0 or popcount(undominated) > picks_left * widest:
            return None
        target = lowest_bit(undominated)
        for u in iter_bits(closed[target]):
            found = search(undominated & ~closed[u], picks_left - 1, chosen + [u])
            if found is not None:
                return found
        return None

    for size in range(1, g.size + 1):
        found = search(full_mask(g.size), size, [])
        if found is not None:
            return sorted(found)
    raise AssertionError("the full vertex set always dominates")


def domination_number(g: Graph, cap: Optional[int] = None) -> int:
    return len(minimum_dominating_set(g, cap))


def degree(g: Graph, v: int) -> int:
    g.check_vertex(v)
    return popcount(g.adjacency[v])


# --- multipartite structure -------------------------------------------------

@dataclass(frozen=True)
class NotCompleteMultipartite:
    """Outcome of complete_multipartite_parts when the graph is not complete multipartite."""
    pair: Tuple[int, int]
    reason: str


def complete_multipartite_parts(g: Graph) -> Union[List[List[int]], NotCompleteMultipartite]:
    """
    Parts are the components of the complement. The graph is complete
    multipartite iff every vertex is adjacent to exactly the vertices outside
    its own part.
    """
    _require_vertices(g, "complete_multipartite_parts")
    parts = connected_components(complement(g))
    everyone = full_mask(g.size)
    for part in parts:
        part_mask = mask_of(part)
        for v in part:
            inside = g.adjacency[v] & part_mask
            if inside:
                return NotCompleteMultipartite((v, lowest_bit(inside)), "adjacent inside a part")
            missing = everyone & ~part_mask & ~g.adjacency[v]
            if missing:
                a, b = sorted((v, lowest_bit(missing)))
                return NotCompleteMultipartite((a, b), "not joined across parts")
    return parts


def is_independent_partition(g: Graph, parts: Sequence[Sequence[int]]) -> bool:
    """True iff the parts cover every vertex exactly once and each part is independent."""
    covered = 0
    for part in parts:
        part_mask = mask_of(part)
        if covered & part_mask or popcount(part_mask) != len(part):
            return False
        covered |= part_mask
        if not is_independent_set(g, part):
            return False
    return covered == full_mask(g.size)


def clique_components(g: Graph) -> List[List[int]]:
    """Connected components that are cliques, in order of their smallest vertex."""
    return [c for c in connected_components(g) if is_clique(g, c)]
