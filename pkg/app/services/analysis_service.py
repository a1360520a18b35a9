"""
Analysis service - computes graph invariants by name.
Every result is JSON-ready so the CLI and the API can print it as is.
"""
from typing import Any, Callable, Dict, List, Sequence

from app.core.errors import UnknownInvariant
from app.graphs.invariants import (
    clique_components,
    complete_multipartite_parts,
    degree,
    diameter,
    girth,
    is_connected,
    max_clique,
    max_independent_set,
    minimum_dominating_set,
    NotCompleteMultipartite,
)
from app.graphs.planarity import is_planar
from app.models.graph import Graph
from app.schemas.graph import INVARIANTS


def _clique(g: Graph) -> Dict[str, Any]:
    vertices = max_clique(g)
    return {"size": len(vertices), "vertices": vertices}


def _independence(g: Graph) -> Dict[str, Any]:
    vertices = max_independent_set(g)
    return {"size": len(vertices), "vertices": vertices}


def _domination(g: Graph) -> Dict[str, Any]:
    vertices = minimum_dominating_set(g)
    return {"size": len(vertices), "vertices": vertices}


def _multipartite(g: Graph) -> Dict[str, Any]:
    parts = complete_multipartite_parts(g)
    if isinstance(parts, NotCompleteMultipartite):
        return {"complete_multipartite": False, "pair": list(parts.pair), "reason": parts.reason}
    return {"complete_multipartite": True, "parts": parts, "part_sizes": [len(p) for p in parts]}


def _planar(g: Graph) -> Dict[str, Any]:
    result = is_planar(g)
    if result.planar:
        return {"planar": True, "embedding": {str(v): order for v, order in sorted(result.embedding.items())}}
    certificate = result.certificate
    return {
        "planar": False,
        "certificate": {
            "kind": certificate.kind,
            "edges": [list(edge) for edge in certificate.edges],
            "branch": list(certificate.branch),
        },
    }


def _cliques(g: Graph) -> Dict[str, Any]:
    components = clique_components(g)
    return {
        "components": components,
        "sizes": [len(c) for c in components],
        "all_cliques": sum(len(c) for c in components) == g.size,
    }


class AnalysisService:
    """
    Service for graph invariants.
    Maps invariant names (as accepted by --analyze and POST /graphs/analyze) to computations.
    """

    def __init__(self):
        self._invariants: Dict[str, Callable[[Graph], Any]] = {
            "clique": _clique,
            "independence": _independence,
            "connected": is_connected,
            "diameter": lambda g: diameter(g).to_json(),
            "girth": lambda g: girth(g).to_json(),
            "domination": _domination,
            "degrees": lambda g: [degree(g, v) for v in range(g.size)],
            "multipartite": _multipartite,
            "planar": _planar,
            "cliques": _cliques,
        }
        assert list(self._invariants) == INVARIANTS

    @property
    def invariants(self) -> List[str]:
        return list(self._invariants)

    def analyze(self, g: Graph, names: Sequence[str]) -> Dict[str, Any]:
        """
        Compute the named invariants in the order given.

        Raises:
            UnknownInvariant before anything is computed; EmptyGraph and
            SizeLimitExceeded from the invariants themselves
        """
        for name in names:
            if name not in self._invariants:
                raise UnknownInvariant(name)
        return {name: self._invariants[name](g) for name in names}


# Singleton instance
_analysis_service: AnalysisService = None


def get_analysis_service() -> AnalysisService:
    """Get the global analysis service instance."""
    global _analysis_service
    if _analysis_service is None:
        _analysis_service = AnalysisService()
    return _analysis_service
