"""
Generator service - builds any graph family by name.
Shared by the CLI `gen` command and POST /graphs/generate.
"""
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from app.core import config
from app.core.errors import InvalidInput, SizeLimitExceeded, UnknownFamily
from app.families.cone import cone_graph
from app.families.idempotent import idempotent_extremal, idempotent_graph, idempotent_subposet
from app.families.matrices import matrix_extremal, matrix_graph
from app.families.pdg import blocks_union, pdg_extremal, pdg_graph, pdg_subposet
from app.families.zn import divisibility_graph_zn, inclusion_ideal_graph_zn
from app.models.cone import ConeSpec, Window
from app.models.graph import Graph
from app.models.ramsey import RamseyQuery
from app.models.rings import IdempotentMask, PdgSpec, PdgVertex
from app.order.poset import comparability_graph
from app.ramsey.engine import extremal_po_graph


@dataclass
class FamilyParams:
    """Parameters accepted by the generators; each family reads the ones it needs."""
    n: Optional[int] = None
    m: Optional[int] = None
    width: Optional[int] = None
    k: Optional[int] = None
    lo: Optional[int] = None
    hi: Optional[int] = None
    moduli: Optional[Tuple[int, ...]] = None
    dimension: int = 2

    def require(self, *names: str) -> None:
        missing = [name for name in names if getattr(self, name) is None]
        if missing:
            raise InvalidInput(f"Missing parameter(s): {', '.join('--' + name for name in missing)}")

    @property
    def query(self) -> RamseyQuery:
        self.require("n", "m")
        return RamseyQuery(self.n, self.m)


@dataclass
class GeneratedGraph:
    """A generated graph plus the extremal blocks (vertex indices) when the family has them."""
    family: str
    graph: Graph
    blocks: Optional[List[List[int]]] = None


def _guard(vertices: int) -> None:
    if vertices > config.MAX_FAMILY_VERTICES:
        raise SizeLimitExceeded(vertices, config.MAX_FAMILY_VERTICES)


def _reindex(blocks, order: List[int]) -> List[List[int]]:
    position = {v: i for i, v in enumerate(order)}
    return [[position[v] for v in block] for block in blocks]


class GeneratorService:
    """
    Service for generating graph families.
    Keeps the family name -> builder table in one place.
    """

    def __init__(self):
        self._builders: Dict[str, Callable[[FamilyParams], GeneratedGraph]] = {
            "pdg": self._pdg,
            "div-zn": self._div_zn,
            "ideal-zn": self._ideal_zn,
            "idm": self._idm,
            "cone": self._cone,
            "extremal-po": self._extremal_po,
            "extremal-pdg": self._extremal_pdg,
            "extremal-idm": self._extremal_idm,
            "extremal-mat": self._extremal_mat,
        }

    @property
    def families(self) -> List[str]:
        return list(self._builders)

    def generate(self, family: str, params: FamilyParams) -> GeneratedGraph:
        """
        Build the named family.

        Raises:
            UnknownFamily, InvalidInput for missing parameters, SizeLimitExceeded
        """
        builder = self._builders.get(family)
        if builder is None:
            raise UnknownFamily(family)
        return builder(params)

    def _pdg(self, params: FamilyParams) -> GeneratedGraph:
        if params.moduli:
            spec = PdgSpec(tuple(params.moduli))
        else:
            params.require("n")
            _guard(2 ** params.n)
            spec = PdgSpec.from_primes(params.n)
        _guard(spec.vertex_count)
        return GeneratedGraph("pdg", pdg_graph(spec))

    def _div_zn(self, params: FamilyParams) -> GeneratedGraph:
        params.require("n")
        _guard(params.n)
        return GeneratedGraph("div-zn", divisibility_graph_zn(params.n))

    def _ideal_zn(self, params: FamilyParams) -> GeneratedGraph:
        params.require("n")
        return GeneratedGraph("ideal-zn", inclusion_ideal_graph_zn(params.n))

    def _idm(self, params: FamilyParams) -> GeneratedGraph:
        params.require("width")
        return GeneratedGraph("idm", idempotent_graph(params.width))

    def _cone(self, params: FamilyParams) -> GeneratedGraph:
        params.require("k", "lo", "hi")
        window = Window(params.lo, params.hi)
        _guard(window.width)
        return GeneratedGraph("cone", cone_graph(ConeSpec(params.k), window))

    def _extremal_po(self, params: FamilyParams) -> GeneratedGraph:
        _, graph, partition = extremal_po_graph(params.query)
        return GeneratedGraph("extremal-po", graph, [list(block) for block in partition.blocks])

    def _extremal_pdg(self, params: FamilyParams) -> GeneratedGraph:
        spec, blocks = pdg_extremal(params.query)
        masks = blocks_union(blocks)
        labels = [PdgVertex.of(spec, mask).label for mask in masks]
        graph = comparability_graph(pdg_subposet(masks), labels)
        return GeneratedGraph("extremal-pdg", graph, _reindex(blocks, masks))

    def _extremal_idm(self, params: FamilyParams) -> GeneratedGraph:
        width, blocks = idempotent_extremal(params.query)
        masks = [mask for block in blocks for mask in block]
        labels = [IdempotentMask(width, mask).label for mask in masks]
        graph = comparability_graph(idempotent_subposet(width, masks), labels)
        return GeneratedGraph("extremal-idm", graph, _reindex(blocks, masks))

    def _extremal_mat(self, params: FamilyParams) -> GeneratedGraph:
        matrices, blocks = matrix_extremal(params.query, params.dimension)
        return GeneratedGraph("extremal-mat", matrix_graph(matrices), [list(block) for block in blocks])


# Singleton instance
_generator_service: GeneratorService = None


def get_generator_service() -> GeneratorService:
    """Get the global generator service instance."""
    global _generator_service
    if _generator_service is None:
        _generator_service = GeneratorService()
    return _generator_service
