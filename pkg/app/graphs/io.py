"""
Graph/Poset JSON codecs, DOT export and the networkx adapter.
"""
from typing import Any, Dict, Optional, Tuple

import networkx as nx

from app.core.errors import InvalidGraph
from app.models.graph import Graph
from app.models.poset import Poset
from app.order.poset import validate_poset
from app.schemas.graph import GraphPayload, PosetPayload


def graph_to_payload(g: Graph) -> GraphPayload:
    return GraphPayload(
        size=g.size,
        labels=[g.label(v) for v in range(g.size)],
        edges=[[a, b] for a, b in g.edges()],
    )


def graph_to_json(g: Graph) -> Dict[str, Any]:
    return graph_to_payload(g).model_dump()


def graph_from_payload(payload: GraphPayload) -> Graph:
    labels = tuple(payload.labels) if payload.labels else None
    if labels is not None and len(labels) != payload.size:
        raise InvalidGraph(f"Expected {payload.size} labels, got {len(labels)}")
    return Graph.from_edges(payload.size, ((a, b) for a, b in payload.edges), labels)


def graph_from_json(data: Dict[str, Any]) -> Graph:
    return graph_from_payload(GraphPayload.model_validate(data))


def poset_to_json(p: Poset) -> Dict[str, Any]:
    return PosetPayload(size=p.size, leq=p.leq.tolist()).model_dump()


def poset_from_json(data: Dict[str, Any]) -> Poset:
    payload = PosetPayload.model_validate(data)
    if len(payload.leq) != payload.size:
        raise InvalidGraph(f"Poset size {payload.size} does not match {len(payload.leq)} rows")
    return validate_poset(payload.leq)


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def graph_to_dot(g: Graph, name: str = "G") -> str:
    """Undirected DOT with quoted labels; vertex and edge order are fixed."""
    lines = [f"graph {_quote(name)} {{"]
    for v in range(g.size):
        lines.append(f"  {v} [label={_quote(g.label(v))}];")
    for a, b in g.edges():
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_networkx(g: Graph) -> nx.Graph:
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(range(g.size))
    nx_graph.add_edges_from(g.edges())
    return nx_graph


def from_networkx(nx_graph: nx.Graph, labels: Optional[Tuple[str, ...]] = None) -> Graph:
    """Nodes must be 0..size-1."""
    return Graph.from_edges(nx_graph.number_of_nodes(), nx_graph.edges(), labels)
