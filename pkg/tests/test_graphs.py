"""
Tests for graph invariants: cliques, distances, domination, degrees and
multipartite structure.
"""
from itertools import combinations

import numpy as np
import pytest

from app.core.errors import EmptyGraph, InvalidGraph, SizeLimitExceeded, VertexOutOfRange
from app.families.pdg import pdg_graph
from app.graphs.io import from_networkx, to_networkx
from app.graphs.invariants import (
    NotCompleteMultipartite,
    clique_components,
    clique_number,
    complement,
    complete_multipartite_parts,
    connected_components,
    degree,
    diameter,
    domination_number,
    girth,
    independence_number,
    induced_subgraph,
    is_clique,
    is_connected,
    is_independent_partition,
    is_independent_set,
    max_clique,
    minimum_dominating_set,
)
from app.models.graph import INFINITE, Distance, Graph
from app.models.rings import PdgSpec
from app.models.ramsey import RamseyQuery
from app.ramsey.engine import extremal_po_graph


def path(size):
    return Graph.from_edges(size, [(v, v + 1) for v in range(size - 1)])


def cycle(size):
    return Graph.from_edges(size, [(v, (v + 1) % size) for v in range(size)])


def complete_bipartite(left, right):
    return Graph.from_edges(left + right, [(a, left + b) for a in range(left) for b in range(right)])


@pytest.fixture(scope="module")
def pdg4():
    return pdg_graph(PdgSpec.from_primes(4))


@pytest.fixture(scope="module")
def pdg3():
    return pdg_graph(PdgSpec.from_primes(3))


def _brute_alpha(g):
    return max(
        (len(s) for r in range(g.size + 1) for s in combinations(range(g.size), r) if is_independent_set(g, s)),
        default=0,
    )


def test_graph_rejects_asymmetric_adjacency():
    """Adjacency must be symmetric and loop-free."""
    with pytest.raises(InvalidGraph):
        Graph(2, (0b10, 0))
    with pytest.raises(InvalidGraph):
        Graph(1, (0b1,))
    with pytest.raises(VertexOutOfRange):
        Graph.from_edges(2, [(0, 2)])


def test_induced_subgraph():
    """Full subsets reproduce the graph; subsets of K5 are complete."""
    k5 = Graph.complete(5)
    assert induced_subgraph(k5, range(5)) == k5
    assert induced_subgraph(k5, [1, 3, 4]).adjacency == Graph.complete(3).adjacency
    with pytest.raises(VertexOutOfRange):
        induced_subgraph(k5, [0, 7])


def test_induced_divisor_chain_is_a_triangle(pdg4):
    """m1, m1m2, m1m2m3 (masks 1, 3, 7) induce K3 and keep their labels."""
    sub = induced_subgraph(pdg4, [0, 2, 6])
    assert sub.edge_count == 3
    assert sub.labels == ("m1", "m1*m2", "m1*m2*m3")


def test_clique_and_independence_numbers(pdg4):
    """K_n has omega n; empty graphs have alpha m; pdg(4) has omega 3 and alpha 6."""
    assert clique_number(Graph.complete(6)) == 6
    assert independence_number(Graph.empty(5)) == 5
    assert clique_number(Graph.empty(0)) == 0
    assert clique_number(pdg4) == 3
    assert independence_number(pdg4) == 6
    assert is_clique(pdg4, max_clique(pdg4))


def test_extremal_poset_graph_numbers():
    """The (4,5) extremal graph has omega 3, alpha 4 and three parts of four."""
    _, g, partition = extremal_po_graph(RamseyQuery(4, 5))
    assert clique_number(g) == 3
    assert independence_number(g) == 4
    parts = complete_multipartite_parts(g)
    assert [len(part) for part in parts] == [4, 4, 4]
    assert [tuple(part) for part in parts] == list(partition.blocks)


def test_alpha_is_omega_of_complement_on_random_graphs():
    """Independence number agrees with brute force and with the complement's clique number."""
    rng = np.random.default_rng(3)
    for _ in range(30):
        size = int(rng.integers(1, 10))
        edges = [(a, b) for a, b in combinations(range(size), 2) if rng.random() < 0.4]
        g = Graph.from_edges(size, edges)
        assert independence_number(g) == clique_number(complement(g)) == _brute_alpha(g)


def test_exact_search_cap():
    """Graphs above the cap are refused rather than approximated."""
    with pytest.raises(SizeLimitExceeded):
        clique_number(Graph.empty(10), cap=5)
    with pytest.raises(SizeLimitExceeded):
        domination_number(Graph.empty(10), cap=5)


def test_connectivity(pdg3):
    """pdg(2) is two isolated vertices; pdg(3) and K1 are connected."""
    assert not is_connected(pdg_graph(PdgSpec.from_primes(2)))
    assert is_connected(pdg3)
    assert is_connected(Graph.empty(1))
    with pytest.raises(EmptyGraph):
        is_connected(Graph.empty(0))


def test_networkx_round_trip_and_complement(pdg4):
    """Conversion keeps vertices and edges; the complement keeps labels and is an involution."""
    nx_graph = to_networkx(pdg4)
    assert nx_graph.number_of_nodes() == 14
    assert from_networkx(nx_graph, pdg4.labels) == pdg4
    co = complement(pdg4)
    assert co.labels == pdg4.labels
    assert co.edge_count == 14 * 13 // 2 - pdg4.edge_count
    assert complement(co) == pdg4


def test_connected_components_order():
    """Components come in order of their smallest vertex."""
    g = Graph.from_edges(5, [(3, 4), (0, 2)])
    assert connected_components(g) == [[0, 2], [1], [3, 4]]


def test_diameter(pdg3, pdg4):
    """pdg(n) has diameter 3 for n >= 3; K_n has 1; disconnected graphs are infinite."""
    assert diameter(pdg3) == Distance(3)
    assert diameter(pdg4) == Distance(3)
    assert diameter(Graph.complete(4)) == Distance(1)
    assert diameter(pdg_graph(PdgSpec.from_primes(2))) == INFINITE
    assert diameter(path(5)) == Distance(4)
    with pytest.raises(EmptyGraph):
        diameter(Graph.empty(0))


def test_girth(pdg3, pdg4):
    """pdg(3) is a 6-cycle, pdg(4) has triangles, trees are acyclic."""
    assert girth(pdg3) == Distance(6)
    assert girth(pdg4) == Distance(3)
    assert girth(path(6)) == INFINITE
    assert girth(cycle(5)) == Distance(5)
    assert girth(complete_bipartite(2, 3)) == Distance(4)
    assert girth(Graph.empty(0)) == INFINITE
    assert girth(pdg3).to_json() == 6
    assert INFINITE.to_json() == "inf"


def test_domination(pdg3, pdg4):
    """K_n needs 1, pdg(n) needs 2, the empty graph on v vertices needs v."""
    assert domination_number(Graph.complete(5)) == 1
    assert domination_number(pdg3) == 2
    assert domination_number(pdg4) == 2
    assert domination_number(Graph.empty(4)) == 4
    assert domination_number(path(7)) == 3
    dominating = minimum_dominating_set(pdg4)
    covered = 0
    for v in dominating:
        covered |= pdg4.adjacency[v] | (1 << v)
    assert covered == (1 << pdg4.size) - 1
    with pytest.raises(EmptyGraph):
        domination_number(Graph.empty(0))


def test_degrees(pdg3, pdg4):
    """deg = 2^k + 2^(n-k) - 4 for a k-element index set."""
    assert degree(pdg3, 0) == 2
    assert degree(pdg4, 2) == 4
    assert degree(Graph.empty(3), 1) == 0
    with pytest.raises(VertexOutOfRange):
        degree(pdg3, 6)


def test_complete_bipartite_parts():
    """K_{2,3} splits into its two sides."""
    parts = complete_multipartite_parts(complete_bipartite(2, 3))
    assert parts == [[0, 1], [2, 3, 4]]
    assert is_independent_partition(complete_bipartite(2, 3), parts)


def test_path_is_not_complete_multipartite():
    """P4 has a single complement component, which is not independent."""
    outcome = complete_multipartite_parts(path(4))
    assert isinstance(outcome, NotCompleteMultipartite)
    assert outcome.reason == "adjacent inside a part"


def test_independent_partition_rejects_overlaps_and_gaps():
    """Parts must cover every vertex exactly once."""
    g = Graph.empty(3)
    assert not is_independent_partition(g, [[0, 1], [1, 2]])
    assert not is_independent_partition(g, [[0, 1]])
    assert not is_independent_partition(Graph.complete(2), [[0, 1]])


def test_clique_components():
    """Only components that are cliques are reported."""
    g = Graph.from_edges(7, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5)])
    assert clique_components(g) == [[0, 1, 2], [6]]
