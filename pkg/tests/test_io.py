"""
Tests for the Graph/Poset JSON codecs and DOT export.
"""
import pytest
from pydantic import ValidationError

from app.core.errors import InvalidGraph, NotAntisymmetric
from app.families.cone import cone_graph
from app.families.pdg import pdg_graph
from app.families.zn import divisibility_graph_zn
from app.graphs.io import graph_from_json, graph_to_dot, graph_to_json, poset_from_json, poset_to_json
from app.models.cone import ConeSpec, Window
from app.models.graph import Graph
from app.models.rings import PdgSpec
from app.order.poset import validate_poset


def test_graph_json_shape():
    """Edges are sorted [i, j] pairs with i < j and labels are always present."""
    g = Graph.from_edges(3, [(2, 1), (1, 0)])
    assert graph_to_json(g) == {"size": 3, "labels": ["0", "1", "2"], "edges": [[0, 1], [1, 2]]}


def test_generated_graphs_survive_json():
    """Size, labels and edges come back unchanged."""
    for g in (
        pdg_graph(PdgSpec.from_primes(4)),
        divisibility_graph_zn(12),
        cone_graph(ConeSpec(3), Window(1, 12)),
    ):
        back = graph_from_json(graph_to_json(g))
        assert back.size == g.size
        assert back.labels == g.labels
        assert back.edges() == g.edges()


def test_graph_json_errors():
    """Bad endpoints, label counts and edge arity are rejected."""
    with pytest.raises(InvalidGraph):
        graph_from_json({"size": 2, "labels": ["a"], "edges": []})
    with pytest.raises(InvalidGraph):
        graph_from_json({"size": 2, "edges": [[0, 0]]})
    with pytest.raises(ValidationError):
        graph_from_json({"size": 2, "edges": [[0, 1, 1]]})


def test_poset_json():
    """Poset JSON is validated on the way in."""
    p = validate_poset([[True, True], [False, True]])
    assert poset_from_json(poset_to_json(p)) == p
    with pytest.raises(NotAntisymmetric):
        poset_from_json({"size": 2, "leq": [[True, True], [True, True]]})
    with pytest.raises(InvalidGraph):
        poset_from_json({"size": 3, "leq": [[True, True], [False, True]]})


def test_dot_export_is_deterministic():
    """DOT output for the n=3 divisor graph is fixed byte for byte."""
    g = pdg_graph(PdgSpec.from_primes(3))
    dot = graph_to_dot(g, "pdg")
    assert dot == graph_to_dot(pdg_graph(PdgSpec.from_primes(3)), "pdg")
    lines = dot.splitlines()
    assert lines[0] == 'graph "pdg" {'
    assert lines[1] == '  0 [label="m1"];'
    assert lines[3] == '  2 [label="m1*m2"];'
    assert '  0 -- 2;' in lines
    assert lines[-1] == "}"
    assert sum(1 for line in lines if "--" in line) == 6


def test_dot_quotes_labels():
    """Quotes and backslashes in labels are escaped."""
    g = Graph.from_edges(1, [], ['say "hi"\\'])
    assert '  0 [label="say \\"hi\\"\\\\"];' in graph_to_dot(g)
