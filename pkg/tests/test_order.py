"""
Tests for posets, comparability graphs, orientation and Mirsky levels.
"""
from itertools import combinations

import numpy as np
import pytest

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
from app.families.pdg import pdg_poset
from app.graphs.invariants import clique_number, induced_subgraph, is_independent_set
from app.models.poset import OrientedGraph
from app.models.rings import PdgSpec
from app.order.enumeration import iter_labeled_posets
from app.order.poset import (
    comparability_graph,
    level_antichain,
    longest_chain,
    mirsky_levels,
    orient,
    poset_from_down_sets,
    validate_poset,
)


def chain(size):
    return validate_poset(np.triu(np.ones((size, size), dtype=bool)))


def antichain(size):
    return validate_poset(np.eye(size, dtype=bool))


@pytest.fixture(scope="module")
def diamond():
    """0 below 1 and 2, both below 3."""
    leq = np.eye(4, dtype=bool)
    for a, b in [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)]:
        leq[a, b] = True
    return validate_poset(leq)


def test_identity_relation_is_an_antichain():
    """The identity relation is a valid poset with no comparable pairs."""
    p = antichain(3)
    assert p.size == 3
    assert not any(p.comparable(a, b) for a, b in combinations(range(3), 2))


def test_total_order_is_valid():
    """An upper-triangular relation is a chain."""
    p = chain(3)
    assert p.down == (0, 0b1, 0b11)
    assert p.up == (0b110, 0b100, 0)


def test_not_antisymmetric_names_the_pair():
    """leq[0][1] and leq[1][0] with 0 != 1 is rejected with that pair."""
    with pytest.raises(NotAntisymmetric) as info:
        validate_poset([[True, True], [True, True]])
    assert info.value.pair == (0, 1)


def test_not_reflexive_names_the_element():
    """A missing diagonal entry is rejected."""
    with pytest.raises(NotReflexive) as info:
        validate_poset([[True, False], [False, False]])
    assert info.value.element == 1


def test_not_transitive_names_a_triple():
    """0 <= 1 <= 2 without 0 <= 2 is rejected."""
    raw = [[True, True, False], [False, True, True], [False, False, True]]
    with pytest.raises(NotTransitive) as info:
        validate_poset(raw)
    assert info.value.triple == (0, 1, 2)


def test_shape_errors():
    """Non-square and empty relations are rejected."""
    with pytest.raises(NotSquare):
        validate_poset([[True, False]])
    with pytest.raises(NotSquare) as info:
        validate_poset([[True, False], [True]])
    assert info.value.shape == (2, 1)
    with pytest.raises(EmptyPoset):
        validate_poset([])


def test_comparability_of_chain_and_antichain():
    """A chain gives a clique, an antichain gives no edges."""
    assert comparability_graph(chain(3)).edges() == [(0, 1), (0, 2), (1, 2)]
    assert comparability_graph(antichain(4)).edge_count == 0


def test_comparability_of_three_prime_divisor_poset():
    """The n=3 divisor poset is the bipartite 6-cycle."""
    g = comparability_graph(pdg_poset(PdgSpec.from_primes(3)))
    assert g.edge_count == 6
    assert all(bin(nbrs).count("1") == 2 for nbrs in g.adjacency)


def test_orient_chain_and_antichain():
    """Arcs follow the strict order."""
    assert orient(chain(3)).arcs == frozenset({(0, 1), (0, 2), (1, 2)})
    assert orient(antichain(3)).arcs == frozenset()


def test_edges_match_arcs(diamond):
    """Edge {a, b} exactly when an arc joins a and b in either direction."""
    g = comparability_graph(diamond)
    arcs = orient(diamond).arcs
    for a, b in combinations(range(4), 2):
        assert g.has_edge(a, b) == ((a, b) in arcs or (b, a) in arcs)


def test_mirsky_levels_chain_and_antichain():
    """Chains climb one level per element; antichains stay at level 0."""
    levels = mirsky_levels(orient(chain(4)), range(4))
    assert [levels.level[v] for v in range(4)] == [0, 1, 2, 3]
    assert levels.max_level == 3
    flat = mirsky_levels(orient(antichain(5)), range(5))
    assert set(flat.level.values()) == {0}


def test_mirsky_levels_of_three_prime_divisor_poset():
    """Primes sit on level 0 and the pairwise products on level 1."""
    levels = mirsky_levels(orient(pdg_poset(PdgSpec.from_primes(3))), range(6))
    # index = mask - 1: primes are masks 1, 2, 4
    assert levels.vertices_at(0) == [0, 1, 3]
    assert levels.vertices_at(1) == [2, 4, 5]


def test_mirsky_levels_on_a_subset(diamond):
    """Levels are computed inside the induced sub-digraph only."""
    levels = mirsky_levels(orient(diamond), [1, 2, 3])
    assert levels.level == {1: 0, 2: 0, 3: 1}


def test_mirsky_levels_rejects_cycles_and_bad_subsets():
    """Directed cycles, empty subsets and out-of-range vertices are errors."""
    cyclic = OrientedGraph(3, frozenset({(0, 1), (1, 2), (2, 0)}))
    with pytest.raises(CyclicInput):
        mirsky_levels(cyclic, range(3))
    with pytest.raises(EmptySubset):
        mirsky_levels(orient(chain(2)), [])
    with pytest.raises(VertexOutOfRange):
        mirsky_levels(orient(chain(2)), [0, 5])


def test_longest_chain(diamond):
    """The smallest-index chain through the levels is returned bottom-up."""
    assert longest_chain(chain(5), range(5)) == [0, 1, 2, 3, 4]
    assert len(longest_chain(antichain(3), range(3))) == 1
    assert longest_chain(diamond, range(4)) == [0, 1, 3]


def test_longest_chain_in_four_prime_divisor_poset():
    """Subset chains of length 3, e.g. {1} < {1,2} < {1,2,3}."""
    p = pdg_poset(PdgSpec.from_primes(4))
    chain_found = longest_chain(p, range(p.size))
    assert len(chain_found) == 3
    assert all(p.leq[a, b] for a, b in zip(chain_found, chain_found[1:]))


def test_level_antichain(diamond):
    """Level sets are the antichains; out-of-range levels are rejected."""
    levels = mirsky_levels(orient(diamond), range(4))
    assert level_antichain(levels, 1) == [1, 2]
    assert level_antichain(levels, 0) == [0]
    with pytest.raises(LevelOutOfRange):
        level_antichain(levels, 3)


def test_levels_and_chains_over_all_small_posets():
    """Level sets are independent and chain length equals the clique number, up to 5 elements."""
    for size in range(1, 6):
        for down in iter_labeled_posets(size):
            p = poset_from_down_sets(down)
            g = comparability_graph(p)
            levels = mirsky_levels(orient(p), range(size))
            for a, b in orient(p).arcs:
                assert levels.level[a] < levels.level[b]
            for lv in range(levels.max_level + 1):
                assert is_independent_set(g, level_antichain(levels, lv))
            assert len(longest_chain(p, range(size))) == clique_number(g) == levels.max_level + 1


def test_chain_length_on_subsets(diamond):
    """Subset chains agree with the clique number of the induced subgraph."""
    g = comparability_graph(diamond)
    for subset in ([0, 1, 2], [1, 2], [0, 3], [2, 3]):
        assert len(longest_chain(diamond, subset)) == clique_number(induced_subgraph(g, subset))
