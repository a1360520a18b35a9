"""
Tests for the ring-theoretic families: perfect divisor graphs, Z_n graphs,
determinant graphs of matrices and idempotent graphs.
"""
import pytest

from app.core.errors import (
    DimensionMismatch,
    ImproperDeterminant,
    ImproperModulus,
    InvalidInput,
    ModulusMismatch,
    NoNontrivialIdeals,
    NoProperElements,
    NotCoprime,
    SizeLimitExceeded,
    TooSmall,
    UnknownFamily,
    WidthLimitExceeded,
)
from app.families.idempotent import (
    extremal_factor_counts,
    generator_product,
    idempotent_extremal,
    idempotent_graph,
    idempotent_poset,
)
from app.families.matrices import matrix_extremal, matrix_graph, matrix_poset, matrix_with_det
from app.families.pdg import (
    blocks_union,
    extremal_outside,
    pdg_expected_properties,
    pdg_extremal,
    pdg_graph,
    pdg_k33_certificate,
    pdg_poset,
    pdg_size_classes,
    pdg_subposet,
)
from app.families.zn import (
    containment_matches_divisibility,
    divides_zn,
    divides_zn_by_search,
    divisibility_graph_zn,
    divisibility_poset_zn,
    inclusion_ideal_graph_zn,
    inclusion_poset_zn,
)
from app.graphs.invariants import (
    clique_number,
    complete_multipartite_parts,
    degree,
    diameter,
    domination_number,
    girth,
    independence_number,
    is_connected,
    is_independent_partition,
)
from app.graphs.planarity import is_planar
from app.models.ramsey import RamseyQuery
from app.models.rings import IdempotentMask, PdgSpec, ZnElement
from app.order.poset import comparability_graph
from app.ramsey.engine import augmented_witness
from app.services.generator_service import FamilyParams, GeneratorService
from app.utils.bits import popcount


SHARPNESS_QUERIES = [
    RamseyQuery(n, m) for n in range(2, 14) for m in range(2, 14) if (n - 1) * (m - 1) <= 12
]
SMALL_QUERIES = [q for q in SHARPNESS_QUERIES if (q.n - 1) * (q.m - 1) <= 6]


def _query_id(q):
    return q.description


@pytest.fixture(scope="module")
def generator():
    return GeneratorService()


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_pdg_matches_closed_form(n):
    """Every computed invariant of pdg(n) agrees with the closed form."""
    expected = pdg_expected_properties(n)
    g = pdg_graph(PdgSpec.from_primes(n))
    assert g.size == expected.vertex_count
    assert is_connected(g) == expected.connected
    assert diameter(g) == expected.diameter
    assert domination_number(g) == expected.domination
    assert girth(g) == expected.girth
    assert is_planar(g).planar == expected.planar
    classes = pdg_size_classes(n)
    assert len(classes) == expected.parts
    assert is_independent_partition(g, classes)
    for v in range(g.size):
        assert degree(g, v) == expected.degree_by_level[popcount(v + 1)]


def test_pdg_size_classes_for_three():
    """Singletons are masks 1, 2, 4; pairs are 3, 5, 6."""
    assert pdg_size_classes(3) == [[0, 1, 3], [2, 4, 5]]


def test_pdg_spec_validation():
    """Moduli must be at least two, pairwise coprime and not units."""
    with pytest.raises(TooSmall):
        PdgSpec((5,))
    with pytest.raises(NotCoprime) as info:
        PdgSpec((6, 10, 7))
    assert info.value.pair == (0, 1)
    with pytest.raises(ImproperModulus):
        PdgSpec((1, 3))
    with pytest.raises(TooSmall):
        pdg_expected_properties(1)
    with pytest.raises(TooSmall):
        pdg_k33_certificate(4)


def test_pdg_structure_ignores_the_moduli():
    """Any coprime set gives the same graph and labels as the first primes."""
    primes = pdg_graph(PdgSpec.from_primes(3))
    powers = pdg_graph(PdgSpec((4, 9, 25)))
    assert powers.adjacency == primes.adjacency
    assert powers.labels == primes.labels
    assert comparability_graph(pdg_poset(PdgSpec((4, 9, 25)))).adjacency == primes.adjacency


def test_pdg_extremal_blocks():
    """(3,3) uses five primes and blocks {m1, m2}, {m1m2m3, m1m2m4}."""
    spec, blocks = pdg_extremal(RamseyQuery(3, 3))
    assert spec.n == 5
    assert blocks == ((0b1, 0b10), (0b111, 0b1011))
    outside = extremal_outside(spec, blocks)
    assert len(outside) == spec.vertex_count - 4
    assert not set(outside) & {1, 2, 7, 11}


def test_divides_zn():
    """a | b iff gcd(a, n) | b; associates divide both ways."""
    assert divides_zn(ZnElement(12, 4), ZnElement(12, 8))
    assert divides_zn(ZnElement(12, 8), ZnElement(12, 4))
    assert divides_zn(ZnElement(12, 2), ZnElement(12, 6))
    assert not divides_zn(ZnElement(12, 6), ZnElement(12, 2))
    with pytest.raises(ModulusMismatch):
        divides_zn(ZnElement(12, 2), ZnElement(10, 2))


def test_divides_zn_agrees_with_search():
    """The gcd shortcut matches trying every multiplier."""
    for n in range(2, 31):
        for a in range(n):
            for b in range(n):
                x, y = ZnElement(n, a), ZnElement(n, b)
                assert divides_zn(x, y) == divides_zn_by_search(x, y)


def test_divisibility_graph_of_z12():
    """Proper elements 2,3,4,6,8,9,10 with eight strict divisibility edges."""
    g = divisibility_graph_zn(12)
    assert g.labels == ("2", "3", "4", "6", "8", "9", "10")
    assert g.edge_count == 8
    assert g.has_edge(0, 2)  # 2 || 4
    assert g.has_edge(5, 3)  # 9 || 6
    assert not g.has_edge(0, 6)  # 2 and 10 are associates
    assert not g.has_edge(2, 4)  # so are 4 and 8


def test_inclusion_ideal_graph_of_z12():
    """Ideals 2Z, 3Z, 4Z, 6Z with 2Z > 4Z, 2Z > 6Z and 3Z > 6Z."""
    g = inclusion_ideal_graph_zn(12)
    assert g.labels == ("2", "3", "4", "6")
    assert g.edges() == [(0, 2), (0, 3), (1, 3)]


def test_prime_moduli_have_nothing_to_draw():
    """Z_p has no proper elements and no non-trivial ideals."""
    with pytest.raises(NoProperElements):
        divisibility_graph_zn(7)
    with pytest.raises(NoNontrivialIdeals):
        inclusion_ideal_graph_zn(7)
    with pytest.raises(InvalidInput):
        divisibility_graph_zn(1)


def test_ideal_containment_is_divisibility():
    """dZ_n contains eZ_n exactly when d | e."""
    assert all(containment_matches_divisibility(n) for n in range(2, 61))


def test_matrix_with_det():
    """diag(d, 1, ..., 1) has determinant d in every dimension."""
    assert matrix_with_det(2, 5).det == 5
    assert matrix_with_det(4, -6).det == -6
    assert (matrix_with_det(3, 2) @ matrix_with_det(3, 3)).det == 6
    with pytest.raises(InvalidInput):
        matrix_with_det(1, 2)


def test_matrix_graph():
    """Determinants 2, 4, 3: only 2 || 4 gives an edge."""
    g = matrix_graph([matrix_with_det(2, d) for d in (2, 4, 3)])
    assert g.edges() == [(0, 1)]
    assert g.labels == ("det=2", "det=4", "det=3")
    assert matrix_graph([]).size == 0


def test_matrix_graph_errors():
    """Units, zero determinants and mixed dimensions are rejected."""
    with pytest.raises(ImproperDeterminant) as info:
        matrix_graph([matrix_with_det(2, 2), matrix_with_det(2, 1)])
    assert info.value.index == 1
    with pytest.raises(ImproperDeterminant):
        matrix_graph([matrix_with_det(2, 0)])
    with pytest.raises(DimensionMismatch):
        matrix_graph([matrix_with_det(2, 2), matrix_with_det(3, 3)])


@pytest.mark.parametrize("j", [2, 3])
def test_matrix_extremal(j):
    """(3,3) gives determinants 2, 3, 30, 42 forming a 4-cycle."""
    matrices, blocks = matrix_extremal(RamseyQuery(3, 3), j)
    assert [m.det for m in matrices] == [2, 3, 30, 42]
    assert blocks == ((0, 1), (2, 3))
    g = matrix_graph(matrices)
    assert g.edge_count == 4
    assert clique_number(g) == 2 and independence_number(g) == 2


def test_idempotent_graph_sizes():
    """Strict containments between subsets of a w-set number 3^w - 2^w."""
    assert idempotent_graph(2).edge_count == 5
    assert idempotent_graph(3).edge_count == 19
    g = idempotent_graph(2)
    assert g.labels == ("00", "10", "01", "11")
    assert not g.has_edge(1, 2)
    with pytest.raises(WidthLimitExceeded):
        idempotent_graph(5, cap=4)


def test_idempotent_mask_arithmetic():
    """Every element of Z_2^w is idempotent; divisibility is reverse support containment."""
    a, b = IdempotentMask(3, 0b011), IdempotentMask(3, 0b001)
    assert all(IdempotentMask(3, m).is_idempotent for m in range(8))
    assert (a * b).mask == 0b001
    assert a.divides(b) and not b.divides(a)


def test_idempotent_extremal():
    """(3,3) has width 4 and blocks {p1, p2}, {p1p2p3, p1p2p4}."""
    width, blocks = idempotent_extremal(RamseyQuery(3, 3))
    assert width == 4
    assert blocks == ((0b1110, 0b1101), (0b1000, 0b0100))


def test_generators_are_comparability_graphs():
    """Each family's graph is the comparability graph of its order."""
    assert comparability_graph(divisibility_poset_zn(12)).adjacency == divisibility_graph_zn(12).adjacency
    assert comparability_graph(inclusion_poset_zn(36)).adjacency == inclusion_ideal_graph_zn(36).adjacency
    assert comparability_graph(idempotent_poset(3)).adjacency == idempotent_graph(3).adjacency
    spec = PdgSpec.from_primes(4)
    assert comparability_graph(pdg_poset(spec)).adjacency == pdg_graph(spec).adjacency
    matrices, _ = matrix_extremal(RamseyQuery(3, 4))
    assert comparability_graph(matrix_poset(matrices)).adjacency == matrix_graph(matrices).adjacency


def test_generator_service_families(generator):
    """Families are built by name and the extremal ones carry their blocks."""
    assert generator.generate("pdg", FamilyParams(n=3)).graph.size == 6
    assert generator.generate("pdg", FamilyParams(moduli=(4, 9, 25))).graph.size == 6
    assert generator.generate("cone", FamilyParams(k=3, lo=1, hi=12)).graph.size == 12
    extremal = generator.generate("extremal-pdg", FamilyParams(n=3, m=3))
    assert extremal.blocks == [[0, 1], [2, 3]]
    assert extremal.graph.labels == ("m1", "m2", "m1*m2*m3", "m1*m2*m4")
    assert generator.generate("extremal-idm", FamilyParams(n=3, m=4)).graph.size == 6


def test_generator_service_errors(generator):
    """Unknown names, missing parameters and oversized graphs are refused."""
    with pytest.raises(UnknownFamily):
        generator.generate("petersen", FamilyParams())
    with pytest.raises(InvalidInput):
        generator.generate("cone", FamilyParams(k=3))
    with pytest.raises(SizeLimitExceeded):
        generator.generate("pdg", FamilyParams(n=20))


@pytest.mark.parametrize("family", ["extremal-pdg", "extremal-idm"])
@pytest.mark.parametrize("q", SHARPNESS_QUERIES, ids=_query_id)
def test_extremal_families_are_sharp(generator, family, q):
    """The blocks induce a complete (n-1)-partite graph with omega n-1 and alpha m-1."""
    generated = generator.generate(family, FamilyParams(n=q.n, m=q.m))
    g = generated.graph
    assert g.size == (q.n - 1) * (q.m - 1)
    assert clique_number(g) == q.n - 1
    assert independence_number(g) == q.m - 1
    parts = complete_multipartite_parts(g)
    assert sorted(sorted(part) for part in parts) == sorted(sorted(block) for block in generated.blocks)


@pytest.mark.parametrize("q", SHARPNESS_QUERIES, ids=_query_id)
def test_idempotent_extremal_clears_one_bit_per_factor(q):
    """Each element clears as many bits as it has factors; only all w factors give zero."""
    width, blocks = idempotent_extremal(q)
    for block, counts in zip(blocks, extremal_factor_counts(q)):
        for mask, count in zip(block, counts):
            assert width - popcount(mask) == count
            assert (mask == 0) == (count == width)


def test_idempotent_extremal_with_m_two_contains_zero():
    """(3,2): blocks {p1} and {p1p2}, and p1p2 is the zero element."""
    width, blocks = idempotent_extremal(RamseyQuery(3, 2))
    assert width == 2
    assert blocks == ((0b10,), (0b00,))


@pytest.mark.parametrize("width", range(1, 13))
def test_fewer_than_width_generators_are_nonzero(width):
    """A product of k < w distinct generators has exactly k zero bits."""
    for k in range(width):
        assert popcount(generator_product(width, range(1, k + 1))) == width - k
    assert generator_product(width, range(1, width + 1)) == 0


@pytest.mark.parametrize("q", SMALL_QUERIES, ids=_query_id)
def test_one_more_divisor_forces_a_witness(q):
    """Any vertex of the ambient pdg added to the extremal blocks yields a valid witness."""
    spec, blocks = pdg_extremal(q)
    elements = blocks_union(blocks)
    for extra in extremal_outside(spec, blocks):
        _, valid = augmented_witness(elements, extra, lambda a, b: a != b and a & ~b == 0, q)
        assert valid, extra


@pytest.mark.parametrize("q", SMALL_QUERIES, ids=_query_id)
def test_one_more_idempotent_forces_a_witness(q):
    """Any mask outside the extremal blocks yields a valid witness."""
    width, blocks = idempotent_extremal(q)
    elements = [mask for block in blocks for mask in block]
    for extra in sorted(set(range(1 << width)) - set(elements)):
        _, valid = augmented_witness(elements, extra, lambda a, b: a != b and b & ~a == 0, q)
        assert valid, extra


@pytest.mark.parametrize("q", SMALL_QUERIES, ids=_query_id)
def test_matrix_extremal_mirrors_divisor_extremal(q):
    """Listed block by block, the determinant family has the same graph as the divisor one."""
    matrices, matrix_blocks = matrix_extremal(q)
    _, blocks = pdg_extremal(q)
    masks = [mask for block in blocks for mask in block]
    assert matrix_graph(matrices).adjacency == comparability_graph(pdg_subposet(masks)).adjacency
    assert [len(block) for block in matrix_blocks] == [len(block) for block in blocks]
