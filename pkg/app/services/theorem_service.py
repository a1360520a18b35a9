"""
Theorem service - the batch driver behind `check` and GET /checks/{theorem_id}.

Each theorem id maps to a generator of ClaimResults. Claims are timed and
counted in the metrics collector as they complete, so a caller can stream
them (the CLI prints one JSON line per claim).
"""
import time
from typing import Any, Callable, Dict, Iterator, List, Optional, Tuple

import numpy as np

from app.core import config
from app.core.errors import UnknownTheoremId, WidthLimitExceeded
from app.core.logging import get_logger
from app.core.metrics import MetricsCollector, get_metrics
from app.families.cone import (
    cone_graph,
    cone_poset,
    cone_ramsey,
    semicone_axioms,
    translation_invariant,
    verify_cone,
)
from app.families.idempotent import (
    extremal_factor_counts,
    idempotent_extremal,
    idempotent_graph,
    idempotent_poset,
)
from app.families.matrices import matrix_extremal, matrix_graph, matrix_poset
from app.families.pdg import (
    blocks_union,
    extremal_outside,
    pdg_expected_properties,
    pdg_extremal,
    pdg_graph,
    pdg_k33_kuratowski,
    pdg_poset,
    pdg_size_classes,
    pdg_subposet,
)
from app.families.zn import (
    containment_matches_divisibility,
    divides_zn,
    divisibility_graph_zn,
    divisibility_poset_zn,
    inclusion_ideal_graph_zn,
    inclusion_poset_zn,
    multiples_zn,
)
from app.graphs.invariants import (
    clique_components,
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
from app.graphs.planarity import is_planar, validate_certificate
from app.models.checks import CheckOptions, ClaimResult, TheoremReport
from app.models.cone import ConeSpec, PkMembership, Window
from app.models.graph import Graph
from app.models.poset import Poset
from app.models.ramsey import RamseyQuery
from app.models.rings import PdgSpec, ZnElement
from app.order.enumeration import KNOWN_LABELED_POSET_COUNTS, count_labeled_posets, random_poset
from app.order.poset import comparability_graph
from app.ramsey.engine import augmented_witness, extract_witness, ramsey_po, witness_is_valid
from app.ramsey.verification import general_ramsey_search, verify_po_class, verify_po_classes
from app.services.generator_service import FamilyParams, GeneratorService, get_generator_service
from app.utils.bits import popcount

logger = get_logger(__name__)

Check = Callable[[], Tuple[bool, Dict[str, Any]]]
Suite = Callable[[CheckOptions], Iterator[ClaimResult]]


def _timed(theorem: str, claim: str, check: Check) -> ClaimResult:
    started = time.perf_counter()
    passed, detail = check()
    return ClaimResult(theorem, claim, bool(passed), (time.perf_counter() - started) * 1000, detail)


def _normalized(parts) -> List[List[int]]:
    return sorted(sorted(part) for part in parts)


def _same_graph(generated: Graph, poset: Poset) -> bool:
    return generated.size == poset.size and generated.adjacency == comparability_graph(poset).adjacency


def _sharpness_pairs(max_product: int) -> List[RamseyQuery]:
    return [
        RamseyQuery(n, m)
        for n in range(2, max_product + 2)
        for m in range(2, max_product + 2)
        if (n - 1) * (m - 1) <= max_product
    ]


# Short theorem ids accepted next to the descriptive ones.
THEOREM_ALIASES: Dict[str, str] = {
    "thm-2.2": "po-ramsey",
    "thm-3.3": "pdg-properties",
    "thm-3.7": "pdg-sharpness",
    "thm-matrices": "oracles",
    "thm-idm-graph": "idempotent-sharpness",
    "thm-boolean": "idempotent-sharpness",
    "thm-fun": "cone-ramsey",
}


def _strictly_contained(a: int, b: int) -> bool:
    return a != b and a & ~b == 0


def _strictly_divides_idempotent(a: int, b: int) -> bool:
    # a | b iff support(b) is inside support(a)
    return a != b and b & ~a == 0


class TheoremService:
    """
    Service for theorem checks.
    Runs one theorem id, or every id for `all`.
    """

    def __init__(
        self,
        generator: Optional[GeneratorService] = None,
        collector: Optional[MetricsCollector] = None,
    ):
        self.generator = generator or get_generator_service()
        self.collector = collector or get_metrics()
        self._suites: Dict[str, Suite] = {
            "poset-counts": self._poset_counts,
            "po-ramsey": self._po_ramsey,
            "pdg-properties": self._pdg_properties,
            "pdg-sharpness": self._pdg_sharpness,
            "idempotent-sharpness": self._idempotent_sharpness,
            "class-gap": self._class_gap,
            "cone-ramsey": self._cone_ramsey,
            "oracles": self._oracles,
            "witness-fuzz": self._witness_fuzz,
        }

    @property
    def theorem_ids(self) -> List[str]:
        return list(self._suites) + ["all"]

    def run(
        self,
        theorem_id: str,
        options: Optional[CheckOptions] = None,
        on_claim: Optional[Callable[[ClaimResult], None]] = None,
    ) -> List[TheoremReport]:
        """
        Run a theorem id, one of its aliases, or `all`, and return one report
        per theorem.

        Raises:
            UnknownTheoremId
        """
        theorem_id = THEOREM_ALIASES.get(theorem_id, theorem_id)
        if theorem_id == "all":
            selected = list(self._suites)
        elif theorem_id in self._suites:
            selected = [theorem_id]
        else:
            raise UnknownTheoremId(theorem_id)

        options = options or CheckOptions()
        reports = []
        for name in selected:
            logger.info(f"🚀 check {name}")
            report = TheoremReport(name)
            for claim in self._suites[name](options):
                self.collector.record_verification(claim.passed, claim.elapsed_ms)
                if not claim.passed:
                    logger.warning(f"❌ {name}: {claim.claim}")
                report.claims.append(claim)
                if on_claim is not None:
                    on_claim(claim)
            passed = len(report.claims) - len(report.failed)
            logger.info(f"{'✅' if report.all_pass else '❌'} {name}: {passed}/{len(report.claims)} claims pass")
            reports.append(report)
        return reports

    # --- order-core ---------------------------------------------------------

    def _poset_counts(self, options: CheckOptions) -> Iterator[ClaimResult]:
        top = min(6, options.max_poset_order or config.MAX_POSET_ORDER)
        for size in range(1, top + 1):
            def check(size=size):
                computed = count_labeled_posets(size)
                expected = KNOWN_LABELED_POSET_COUNTS[size]
                return computed == expected, {"computed": computed, "expected": expected}
            yield _timed("poset-counts", f"labeled posets on {size} elements", check)

    def _po_ramsey(self, options: CheckOptions) -> Iterator[ClaimResult]:
        cap = options.max_poset_order or config.MAX_POSET_ORDER
        queries = [
            RamseyQuery(n, m)
            for n in range(1, cap + 1)
            for m in range(1, cap + 1)
            if (n - 1) * (m - 1) + 1 <= cap
        ]
        for report in verify_po_classes(queries, cap, options.workers):
            detail = {"order": report.order, "enumerated": report.enumerated, **report.details}
            yield ClaimResult(
                "po-ramsey", f"verify-po {report.query.description}", report.all_pass, report.elapsed_ms, detail
            )

        def symmetric():
            asymmetric = [
                (n, m)
                for n in range(1, 101)
                for m in range(1, 101)
                if ramsey_po(RamseyQuery(n, m)) != ramsey_po(RamseyQuery(m, n))
            ]
            return not asymmetric, {"range": [1, 100], "asymmetric": asymmetric[:5]}
        yield _timed("po-ramsey", "closed form is symmetric in n and m", symmetric)

    # --- ring-graphs --------------------------------------------------------

    def _pdg_properties(self, options: CheckOptions) -> Iterator[ClaimResult]:
        theorem = "pdg-properties"
        for n in options.ns or range(2, 7):
            expected = pdg_expected_properties(n)
            g = pdg_graph(PdgSpec.from_primes(n))

            yield _timed(theorem, f"n={n} connected", lambda: (
                is_connected(g) == expected.connected,
                {"computed": is_connected(g), "expected": expected.connected},
            ))

            def check_diameter():
                computed = diameter(g)
                return computed == expected.diameter, {
                    "computed": computed.to_json(), "expected": expected.diameter.to_json(),
                }
            yield _timed(theorem, f"n={n} diameter", check_diameter)

            def check_domination():
                computed = domination_number(g)
                return computed == expected.domination, {"computed": computed, "expected": expected.domination}
            yield _timed(theorem, f"n={n} domination number", check_domination)

            def check_partite():
                classes = pdg_size_classes(n)
                passed = (
                    g.size == expected.vertex_count
                    and len(classes) == expected.parts
                    and is_independent_partition(g, classes)
                )
                return passed, {
                    "vertex_count": g.size,
                    "expected_vertex_count": expected.vertex_count,
                    "parts": len(classes),
                    "expected_parts": expected.parts,
                }
            yield _timed(theorem, f"n={n} multipartite by subset size", check_partite)

            def check_degrees():
                wrong = [
                    v for v in range(g.size)
                    if degree(g, v) != expected.degree_by_level[popcount(v + 1)]
                ]
                return not wrong, {"by_level": expected.degree_by_level, "mismatched": wrong[:5]}
            yield _timed(theorem, f"n={n} degrees 2^k + 2^(n-k) - 4", check_degrees)

            def check_girth():
                computed = girth(g)
                return computed == expected.girth, {"computed": computed.to_json(), "expected": expected.girth.to_json()}
            yield _timed(theorem, f"n={n} girth", check_girth)

            def check_planar():
                result = is_planar(g)
                detail: Dict[str, Any] = {"computed": result.planar, "expected": expected.planar}
                passed = result.planar == expected.planar
                if not result.planar:
                    detail["certificate"] = result.certificate.kind
                    passed = passed and validate_certificate(g, result.certificate)
                if n >= 5:
                    k33 = validate_certificate(g, pdg_k33_kuratowski(n))
                    detail["k33_from_divisors"] = k33
                    passed = passed and k33
                return passed, detail
            yield _timed(theorem, f"n={n} planarity", check_planar)

    def _pdg_sharpness(self, options: CheckOptions) -> Iterator[ClaimResult]:
        theorem = "pdg-sharpness"
        for q in _sharpness_pairs(options.max_product):
            yield _timed(theorem, f"{q.description} extremal structure", lambda q=q: self._extremal_structure("extremal-pdg", q))

            def check_augmented(q=q):
                spec, blocks = pdg_extremal(q)
                elements = blocks_union(blocks)
                extras = extremal_outside(spec, blocks)
                invalid = [x for x in extras if not augmented_witness(elements, x, _strictly_contained, q)[1]]
                return not invalid, {"primes": spec.n, "extras": len(extras), "invalid": invalid[:5]}
            yield _timed(theorem, f"{q.description} one more vertex forces a witness", check_augmented)

    def _idempotent_sharpness(self, options: CheckOptions) -> Iterator[ClaimResult]:
        theorem = "idempotent-sharpness"
        for q in _sharpness_pairs(options.max_product):
            def check_structure(q=q):
                passed, detail = self._extremal_structure("extremal-idm", q)
                width, blocks = idempotent_extremal(q)
                pairs = [
                    (mask, count)
                    for block, counts in zip(blocks, extremal_factor_counts(q))
                    for mask, count in zip(block, counts)
                ]
                # c distinct generators clear exactly c bits; only all w of them give 0
                counted = all(width - popcount(mask) == count for mask, count in pairs)
                nonzero = all(mask != 0 for mask, count in pairs if count < width)
                detail.update(zero_bits_match_factors=counted, products_nonzero=nonzero)
                return passed and counted and nonzero, detail
            yield _timed(theorem, f"{q.description} extremal structure", check_structure)

            def check_augmented(q=q):
                width, blocks = idempotent_extremal(q)
                if width > config.IDEMPOTENT_WIDTH_CAP:
                    raise WidthLimitExceeded(width, config.IDEMPOTENT_WIDTH_CAP)
                elements = [mask for block in blocks for mask in block]
                chosen = set(elements)
                extras = [mask for mask in range(1 << width) if mask not in chosen]
                invalid = [x for x in extras if not augmented_witness(elements, x, _strictly_divides_idempotent, q)[1]]
                return not invalid, {"width": width, "extras": len(extras), "invalid": invalid[:5]}
            yield _timed(theorem, f"{q.description} one more vertex forces a witness", check_augmented)

    def _extremal_structure(self, family: str, q: RamseyQuery) -> Tuple[bool, Dict[str, Any]]:
        generated = self.generator.generate(family, FamilyParams(n=q.n, m=q.m))
        g = generated.graph
        omega, alpha = clique_number(g), independence_number(g)
        parts = complete_multipartite_parts(g)
        parts_match = isinstance(parts, list) and _normalized(parts) == _normalized(generated.blocks)
        passed = omega == q.n - 1 and alpha == q.m - 1 and parts_match
        return passed, {"clique": omega, "independence": alpha, "parts_match_blocks": parts_match}

    # --- ramsey-engine ------------------------------------------------------

    def _class_gap(self, options: CheckOptions) -> Iterator[ClaimResult]:
        theorem = "class-gap"
        q = RamseyQuery(3, 3)

        def general_passes():
            report = general_ramsey_search(q, 6, options.max_graph_order, options.workers)
            return report.all_pass and report.enumerated == 32768, {"enumerated": report.enumerated}
        yield _timed(theorem, "every graph on 6 vertices has K3 or an independent 3-set", general_passes)

        def general_fails():
            report = general_ramsey_search(q, 5, options.max_graph_order, options.workers)
            cx = report.counterexample
            if cx is None:
                return False, {"enumerated": report.enumerated}
            omega, alpha = clique_number(cx), independence_number(cx)
            return omega < 3 and alpha < 3, {"counterexample_edges": cx.edge_count, "clique": omega, "independence": alpha}
        yield _timed(theorem, "some graph on 5 vertices has neither", general_fails)

        def poset_passes():
            report = verify_po_class(q, options.max_poset_order, options.workers)
            return report.all_pass and report.order == 5, {"order": report.order, "enumerated": report.enumerated}
        yield _timed(theorem, "comparability graphs already pass at 5", poset_passes)

    # --- cone-graphs --------------------------------------------------------

    def _cone_ramsey(self, options: CheckOptions) -> Iterator[ClaimResult]:
        theorem = "cone-ramsey"
        ks = options.ks or (2, 3, 4)
        for k in ks:
            spec = ConeSpec(k)
            for n in range(1, 6):
                for m in range(1, 6):
                    def check(spec=spec, q=RamseyQuery(n, m)):
                        report = verify_cone(spec, q)
                        formula = cone_ramsey(spec, q)
                        exhaustive = report.details["pattern_minimum"]
                        return report.all_pass and exhaustive == formula, {
                            "formula": formula, "exhaustive": exhaustive, "raw_subsets": report.details["raw_subsets"],
                        }
                    yield _timed(theorem, f"k={k} n={n} m={m} formula vs exhaustive", check)

            def translation(spec=spec):
                window = Window(1, 12)
                shifted = [offset for offset in range(-12, 13) if not translation_invariant(spec, window, offset)]
                return not shifted, {"offsets": [-12, 12], "not_invariant": shifted}
            yield _timed(theorem, f"k={k} translation invariant", translation)

            def axioms(k=k):
                report = semicone_axioms(range(-40, 41), PkMembership(k))
                return report.is_semicone and report.cone_witness is not None, {
                    "intersect_ok": report.intersect_ok,
                    "add_closed": report.add_closed,
                    "mul_closed": report.mul_closed,
                    "cone_witness": report.cone_witness,
                }
            yield _timed(theorem, f"k={k} semi-cone but not a cone", axioms)

        def asymmetric():
            spec = ConeSpec(3)
            forward, backward = cone_ramsey(spec, RamseyQuery(5, 3)), cone_ramsey(spec, RamseyQuery(3, 5))
            return forward == 9 and backward == 7, {"n=5,m=3": forward, "n=3,m=5": backward}
        yield _timed(theorem, "k=3 asymmetric pair", asymmetric)

        def window_cliques():
            components = clique_components(cone_graph(ConeSpec(3), Window(1, 12)))
            sizes = [len(c) for c in components]
            return sizes == [4, 4, 4], {"components": components}
        yield _timed(theorem, "k=3 window [1, 12] is three 4-cliques", window_cliques)

        def symmetry_pattern():
            # symmetric exactly when both targets stay within k+1, n == m, or one target is 1
            wrong = []
            for k in range(2, 11):
                spec = ConeSpec(k)
                for n in range(1, 13):
                    for m in range(1, 13):
                        same = cone_ramsey(spec, RamseyQuery(n, m)) == cone_ramsey(spec, RamseyQuery(m, n))
                        predicted = n == m or min(n, m) == 1 or max(n, m) <= k + 1
                        if same != predicted:
                            wrong.append([k, n, m])
            return not wrong, {"mismatched": wrong[:5]}
        yield _timed(theorem, "closed form symmetry pattern", symmetry_pattern)

    # --- oracles ------------------------------------------------------------

    def _oracles(self, options: CheckOptions) -> Iterator[ClaimResult]:
        theorem = "oracles"

        def zn_divisibility():
            mismatched = []
            for n in range(2, 201):
                elements = [ZnElement(n, x) for x in range(n)]
                ideals = [multiples_zn(n, x) for x in range(n)]
                for a in elements:
                    for b in elements:
                        if divides_zn(a, b) != (b.value in ideals[a.value]):
                            mismatched.append([n, a.value, b.value])
            return not mismatched, {"moduli": [2, 200], "mismatched": mismatched[:5]}
        yield _timed(theorem, "gcd divisibility in Z_n matches multiplier search", zn_divisibility)

        def pdg_containment():
            wrong = [n for n in range(2, 7) if not _same_graph(pdg_graph(PdgSpec.from_primes(n)), pdg_poset(PdgSpec.from_primes(n)))]
            return not wrong, {"n": [2, 6], "mismatched": wrong}
        yield _timed(theorem, "pdg containment edges match integer divisibility", pdg_containment)

        def ideal_containment():
            wrong = [n for n in range(2, 201) if not containment_matches_divisibility(n)]
            return not wrong, {"moduli": [2, 200], "mismatched": wrong}
        yield _timed(theorem, "ideal containment matches divisor divisibility", ideal_containment)

        def generators_match_posets():
            checked: Dict[str, bool] = {}
            for n in (12, 30, 36, 60):
                checked[f"div-zn n={n}"] = _same_graph(divisibility_graph_zn(n), divisibility_poset_zn(n))
                checked[f"ideal-zn n={n}"] = _same_graph(inclusion_ideal_graph_zn(n), inclusion_poset_zn(n))
            for width in range(1, 6):
                checked[f"idm width={width}"] = _same_graph(idempotent_graph(width), idempotent_poset(width))
            for k in (2, 3, 4, 5):
                window = Window(-10, 10)
                checked[f"cone k={k}"] = _same_graph(cone_graph(ConeSpec(k), window), cone_poset(ConeSpec(k), window))
            for q in (RamseyQuery(2, 3), RamseyQuery(3, 3), RamseyQuery(3, 4)):
                matrices, _ = matrix_extremal(q)
                checked[f"extremal-mat {q.description}"] = _same_graph(matrix_graph(matrices), matrix_poset(matrices))
            return all(checked.values()), {"mismatched": [name for name, ok in checked.items() if not ok]}
        yield _timed(theorem, "every generator equals the comparability graph of its poset", generators_match_posets)

        def cone_edges():
            window = Window(-50, 49)
            values = list(range(window.lo, window.hi + 1))
            wrong = []
            for k in range(2, 11):
                g = cone_graph(ConeSpec(k), window)
                member = PkMembership(k)
                for i, a in enumerate(values):
                    for j in range(i + 1, len(values)):
                        b = values[j]
                        if not (g.has_edge(i, j) == member(b - a) == ((a - b) % k == 0)):
                            wrong.append([k, a, b])
            return not wrong, {"window": [window.lo, window.hi], "k": [2, 10], "mismatched": wrong[:5]}
        yield _timed(theorem, "cone edges are exactly the congruent pairs", cone_edges)

        def matrices_mirror_divisors():
            checked: Dict[str, bool] = {}
            for q in _sharpness_pairs(6):
                matrices, _ = matrix_extremal(q)
                _, blocks = pdg_extremal(q)
                # both families list block 1 first, then block 2, ...
                masks = [mask for block in blocks for mask in block]
                checked[q.description] = _same_graph(matrix_graph(matrices), pdg_subposet(masks))
            return all(checked.values()), {"mismatched": [name for name, ok in checked.items() if not ok]}
        yield _timed(theorem, "determinant extremal graphs match the divisor ones", matrices_mirror_divisors)

    def _witness_fuzz(self, options: CheckOptions) -> Iterator[ClaimResult]:
        samples = options.fuzz_samples or config.FUZZ_SAMPLES
        max_size = options.fuzz_max_size or config.FUZZ_MAX_SIZE
        seed = config.FUZZ_SEED if options.seed is None else options.seed

        def fuzz():
            rng = np.random.default_rng(seed)
            failures = []
            for sample in range(samples):
                size = int(rng.integers(1, max_size + 1))
                p = random_poset(rng, size, float(rng.uniform(0.05, 0.6)))
                n = int(rng.integers(1, size + 1))
                m_max = size if n == 1 else (size - 1) // (n - 1) + 1
                q = RamseyQuery(n, int(rng.integers(1, m_max + 1)))
                chosen = rng.choice(size, int(rng.integers(q.threshold, size + 1)), replace=False)
                subset = [int(v) for v in chosen]
                witness = extract_witness(p, subset, q)
                inside = set(witness.vertices) <= set(subset)
                if not (inside and witness_is_valid(comparability_graph(p), witness, q)):
                    failures.append({"sample": sample, "size": size, "n": q.n, "m": q.m})
            return not failures, {"samples": samples, "max_size": max_size, "seed": seed, "failures": failures[:5]}
        yield _timed("witness-fuzz", "random posets always yield a valid witness", fuzz)


# Singleton instance
_theorem_service: TheoremService = None


def get_theorem_service() -> TheoremService:
    """Get the global theorem service instance."""
    global _theorem_service
    if _theorem_service is None:
        _theorem_service = TheoremService()
    return _theorem_service
