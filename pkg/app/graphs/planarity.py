"""
Planarity testing with certificates.

The decision itself is networkx's left-right planarity test. Non-planarity
certificates are Kuratowski subdivisions, and validate_certificate re-checks
them from the edge list alone so a certificate can also come from outside
(for example the K3,3 inside a perfect divisor graph).
"""
from dataclasses import dataclass
from typing import Dict, List, Literal, Optional, Sequence, Set, Tuple

import networkx as nx

from app.core.errors import InvalidInput
from app.graphs.io import to_networkx
from app.models.graph import Graph

Kind = Literal["K5", "K3,3"]


@dataclass(frozen=True)
class KuratowskiCertificate:
    """A K5 or K3,3 subdivision given by its edges; branch vertices are informational."""
    kind: Kind
    edges: Tuple[Tuple[int, int], ...]
    branch: Tuple[int, ...] = ()


@dataclass(frozen=True)
class PlanarityResult:
    """
    planar=True carries a rotation system (clockwise neighbor order per vertex);
    planar=False carries a Kuratowski certificate.
    """
    planar: bool
    embedding: Optional[Dict[int, List[int]]] = None
    certificate: Optional[KuratowskiCertificate] = None


def _suppress_degree_two(edges: Sequence[Tuple[int, int]]) -> Optional[Tuple[Set[int], Set[Tuple[int, int]]]]:
    """
    Contract every path through degree-2 vertices into one edge.
    Returns (branch vertices, reduced edge set), or None when the edge list is
    not a subdivision of a simple graph (loops, parallel paths, stray cycles).
    """
    nbrs: Dict[int, Set[int]] = {}
    for a, b in edges:
        if a == b:
            return None
        nbrs.setdefault(a, set()).add(b)
        nbrs.setdefault(b, set()).add(a)

    branch = {v for v, ns in nbrs.items() if len(ns) != 2}
    if any(len(nbrs[v]) < 2 for v in branch):
        return None

    reduced: Set[Tuple[int, int]] = set()
    visited: Set[int] = set(branch)
    for start in sorted(branch):
        for first in sorted(nbrs[start]):
            previous, current = start, first
            while current not in branch:
                visited.add(current)
                previous, current = current, next(iter(nbrs[current] - {previous}))
            if current == start:
                return None
            pair = (min(start, current), max(start, current))
            if start < current:
                if pair in reduced:
                    return None
                reduced.add(pair)
    if visited != set(nbrs):
        return None
    return branch, reduced


def classify_subdivision(edges: Sequence[Tuple[int, int]]) -> Optional[Kind]:
    """'K5' or 'K3,3' if the edges form a subdivision of that graph, else None."""
    suppressed = _suppress_degree_two(edges)
    if suppressed is None:
        return None
    branch, reduced = suppressed
    if len(branch) == 5 and len(reduced) == 10:
        return "K5"
    if len(branch) == 6 and len(reduced) == 9:
        side: Dict[int, int] = {}
        start = min(branch)
        side[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for a, b in reduced:
                if v in (a, b):
                    u = b if a == v else a
                    if u not in side:
                        side[u] = 1 - side[v]
                        stack.append(u)
                    elif side[u] == side[v]:
                        return None
        if len(side) == 6 and sum(side.values()) == 3:
            return "K3,3"
    return None


def validate_certificate(g: Graph, certificate: KuratowskiCertificate) -> bool:
    """True iff every certificate edge is in g and the edges subdivide the claimed graph."""
    for a, b in certificate.edges:
        if not (0 <= a < g.size and 0 <= b < g.size) or not g.has_edge(a, b):
            return False
    return classify_subdivision(certificate.edges) == certificate.kind


def from_bipartition(left: Sequence[int], right: Sequence[int]) -> KuratowskiCertificate:
    """A direct K3,3 certificate: all nine edges between two vertex triples."""
    if len(left) != 3 or len(right) != 3 or set(left) & set(right):
        raise InvalidInput("A K3,3 certificate needs two disjoint vertex triples")
    edges = tuple((min(a, b), max(a, b)) for a in left for b in right)
    return KuratowskiCertificate("K3,3", edges, tuple(left) + tuple(right))


def is_planar(g: Graph) -> PlanarityResult:
    planar, witness = nx.check_planarity(to_networkx(g), counterexample=True)
    if planar:
        rotation = {int(v): [int(u) for u in order] for v, order in witness.get_data().items()}
        return PlanarityResult(True, embedding=rotation)

    edges = tuple(sorted((min(a, b), max(a, b)) for a, b in witness.edges()))
    kind = classify_subdivision(edges)
    if kind is None:
        raise AssertionError("planarity test returned an unrecognised Kuratowski subgraph")
    branch = tuple(sorted(int(v) for v, d in witness.degree() if d != 2))
    return PlanarityResult(False, certificate=KuratowskiCertificate(kind, edges, branch))


def satisfies_euler_bound(g: Graph) -> bool:
    """Planar graphs on v >= 3 vertices have at most 3v - 6 edges."""
    return g.size < 3 or g.edge_count <= 3 * g.size - 6
