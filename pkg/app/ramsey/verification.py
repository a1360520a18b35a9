"""
Exhaustive verification: every labeled poset at the class Ramsey order, and
every labeled graph for the classical contrast.
"""
import time
from itertools import combinations
from typing import Any, Dict, List, Optional, Sequence, Tuple

from app.core import config
from app.core.errors import CapExceeded, InvalidInput
from app.core.logging import get_logger
from app.graphs.invariants import clique_number, independence_number
from app.models.graph import Graph
from app.models.ramsey import RamseyQuery, RamseyWitness, SearchReport, VerificationReport
from app.order.enumeration import KNOWN_LABELED_POSET_COUNTS, DownSets, iter_labeled_posets, iter_labeled_relations
from app.order.poset import comparability_graph, poset_from_down_sets
from app.ramsey.engine import extremal_po_graph, witness_from_down_sets
from app.ramsey.parallel import run_shards
from app.utils.bits import full_mask, mask_of

logger = get_logger(__name__)

PosetShard = Tuple[DownSets, int, Tuple[Tuple[int, int], ...]]
GraphShard = Tuple[int, int, int, int]


def _witness_holds(down: DownSets, up: DownSets, witness: RamseyWitness, n: int, m: int) -> bool:
    chosen = mask_of(witness.vertices)
    if witness.is_clique:
        if len(witness.vertices) != n:
            return False
        return all(chosen & ~(1 << v) & ~(down[v] | up[v]) == 0 for v in witness.vertices)
    if len(witness.vertices) != m:
        return False
    return all((down[v] | up[v]) & chosen == 0 for v in witness.vertices)


def _check_poset_shard(shard: PosetShard) -> Tuple[int, Tuple[Optional[DownSets], ...]]:
    """
    Count the posets extending one prefix and, per query, keep the first
    poset whose witness is not valid.
    """
    prefix, order, queries = shard
    everyone = full_mask(order)
    count = 0
    failures: List[Optional[DownSets]] = [None] * len(queries)
    for down, up in iter_labeled_relations(order, prefix):
        count += 1
        for i, (n, m) in enumerate(queries):
            if failures[i] is not None:
                continue
            witness = witness_from_down_sets(down, everyone, n, m)
            if not _witness_holds(down, up, witness, n, m):
                failures[i] = down
    return count, tuple(failures)


def _extremal_details(q: RamseyQuery) -> Dict[str, Any]:
    if q.n < 2 or q.m < 2:
        # r - 1 = 0: the empty extremal example avoids both targets vacuously
        return {"extremal_order": 0, "extremal_avoids_both": True}
    _, extremal, _ = extremal_po_graph(q)
    omega, alpha = clique_number(extremal), independence_number(extremal)
    return {
        "extremal_order": extremal.size,
        "extremal_clique": omega,
        "extremal_independence": alpha,
        "extremal_avoids_both": omega < q.n and alpha < q.m,
    }


def verify_po_classes(
    queries: Sequence[RamseyQuery],
    max_order: Optional[int] = None,
    workers: Optional[int] = None,
) -> List[VerificationReport]:
    """
    verify_po_class for several queries; queries sharing r = (n-1)(m-1)+1
    share one enumeration. Reports come back in query order.

    Raises:
        CapExceeded when any r is above the poset-order cap
    """
    cap = config.MAX_POSET_ORDER if max_order is None else max_order
    for q in queries:
        if q.threshold > cap:
            raise CapExceeded("poset order", q.threshold, cap)

    by_order: Dict[int, List[RamseyQuery]] = {}
    for q in queries:
        by_order.setdefault(q.threshold, []).append(q)

    reports: Dict[RamseyQuery, VerificationReport] = {}
    for order, group in sorted(by_order.items()):
        started = time.perf_counter()
        pairs = tuple((q.n, q.m) for q in group)
        prefix_size = min(config.POSET_SHARD_PREFIX, order)
        shards = [(prefix, order, pairs) for prefix in iter_labeled_posets(prefix_size)]
        logger.info(f"🔎 verify-po order {order}: {len(group)} queries, {len(shards)} shards")
        results = run_shards(_check_poset_shard, shards, workers)
        enumerated = sum(count for count, _ in results)
        expected = KNOWN_LABELED_POSET_COUNTS[order] if order < len(KNOWN_LABELED_POSET_COUNTS) else None
        elapsed_ms = (time.perf_counter() - started) * 1000

        for i, q in enumerate(group):
            failure = next((failed[i] for _, failed in results if failed[i] is not None), None)
            details: Dict[str, Any] = {"shards": len(shards)}
            if expected is not None:
                details.update(expected_count=expected, count_matches=enumerated == expected)
            details.update(_extremal_details(q))
            reports[q] = VerificationReport(
                query=q,
                order=order,
                enumerated=enumerated,
                all_pass=(
                    failure is None
                    and details["extremal_avoids_both"]
                    and details.get("count_matches", True)
                ),
                counterexample=comparability_graph(poset_from_down_sets(failure)) if failure is not None else None,
                elapsed_ms=elapsed_ms,
                details=details,
            )
    return [reports[q] for q in queries]


def verify_po_class(
    q: RamseyQuery,
    max_order: Optional[int] = None,
    workers: Optional[int] = None,
) -> VerificationReport:
    """
    Both directions of the closed form at r = (n-1)(m-1)+1: every labeled poset
    on r elements yields a valid witness, and the extremal poset on r-1
    elements has neither a chain of n nor an antichain of m.

    Raises:
        CapExceeded when r is above the poset-order cap
    """
    return verify_po_classes([q], max_order, workers)[0]


# --- general graphs ---------------------------------------------------------

def pairs_of(order: int) -> List[Tuple[int, int]]:
    """Vertex pairs in lexicographic order; bit i of a graph code is pair i."""
    return list(combinations(range(order), 2))


def _has_clique(adjacency: Sequence[int], candidates: int, k: int) -> bool:
    if k == 0:
        return True
    while candidates:
        v = (candidates & -candidates).bit_length() - 1
        candidates &= ~(1 << v)
        if _has_clique(adjacency, candidates & adjacency[v], k - 1):
            return True
    return False


def _adjacency_from_code(order: int, pairs: Sequence[Tuple[int, int]], code: int) -> List[int]:
    adjacency = [0] * order
    for bit, (a, b) in enumerate(pairs):
        if (code >> bit) & 1:
            adjacency[a] |= 1 << b
            adjacency[b] |= 1 << a
    return adjacency


def _check_graph_shard(shard: GraphShard) -> Tuple[int, Optional[int]]:
    """
    The shard fixes the edges at vertex 0 (the first order-1 bits of the code)
    and runs over the rest. Returns (graphs checked, first failing code).
    """
    fixed, order, n, m = shard
    pairs = pairs_of(order)
    low = order - 1
    everyone = full_mask(order)
    count = 0
    for rest in range(1 << (len(pairs) - low)):
        code = fixed | (rest << low)
        adjacency = _adjacency_from_code(order, pairs, code)
        count += 1
        if _has_clique(adjacency, everyone, n):
            continue
        co_adjacency = [everyone & ~nbrs & ~(1 << v) for v, nbrs in enumerate(adjacency)]
        if _has_clique(co_adjacency, everyone, m):
            continue
        return count, code
    return count, None


def general_ramsey_search(
    q: RamseyQuery,
    order: int,
    max_order: Optional[int] = None,
    workers: Optional[int] = None,
) -> SearchReport:
    """
    Check every labeled graph on `order` vertices for a K_n or an independent
    m-set. The counterexample reported is the first one in shard order.

    Raises:
        InvalidInput for order < 1, CapExceeded above the graph-order cap
    """
    cap = config.MAX_GRAPH_ORDER if max_order is None else max_order
    if order < 1:
        raise InvalidInput(f"Graph order must be >= 1, got {order}")
    if order > cap:
        raise CapExceeded("graph order", order, cap)

    started = time.perf_counter()
    shards = [(fixed, order, q.n, q.m) for fixed in range(1 << (order - 1))]
    logger.info(f"🔎 search-general {q.description}: order {order}, {len(shards)} shards")
    results = run_shards(_check_graph_shard, shards, workers)

    # a failing shard stops at its first counterexample, so its count is partial
    enumerated = sum(count for count, _ in results)
    code = next((c for _, c in results if c is not None), None)
    stopped = sum(1 for _, c in results if c is not None)
    counterexample = None
    if code is not None:
        pairs = pairs_of(order)
        adjacency = _adjacency_from_code(order, pairs, code)
        counterexample = Graph(order, tuple(adjacency))

    return SearchReport(
        query=q,
        order=order,
        enumerated=enumerated,
        all_pass=code is None,
        counterexample=counterexample,
        elapsed_ms=(time.perf_counter() - started) * 1000,
        details={
            "shards": len(shards),
            "graphs_total": 1 << len(pairs_of(order)),
            "stopped_shards": stopped,
            "enumerated_partial": stopped > 0,
        },
    )
