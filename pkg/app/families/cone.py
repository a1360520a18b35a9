"""
The k-positive semi-cone P_k = {0, k, 2k, ...} of Z and its graph.

a <=_k b iff b - a is in P_k, so two integers are comparable exactly when
they are congruent mod k. The infinite graph is only ever viewed through a
finite window of integers.
"""
import time
from itertools import combinations
from math import comb
from typing import Callable, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from app.core import config
from app.core.errors import CapExceeded
from app.core.logging import get_logger
from app.graphs.invariants import clique_number, independence_number
from app.models.cone import AxiomReport, ConeSpec, PkMembership, Window
from app.models.graph import Graph
from app.models.poset import Poset
from app.models.ramsey import RamseyQuery, VerificationReport
from app.order.poset import validate_poset
from app.ramsey.engine import extract_witness, witness_is_valid

logger = get_logger(__name__)


def semicone_axioms(sample: Iterable[int], candidate: Callable[[int], bool]) -> AxiomReport:
    """
    Check S ∩ (-S) = {0}, S + S ⊆ S and S·S ⊆ S on a finite sample, and look
    for an integer in neither S nor -S (so S is a semi-cone but not a cone).
    """
    points = sorted(set(sample))
    symmetric = sorted({abs(x) for x in points} - {0})
    violations = [x for x in symmetric if candidate(x) and candidate(-x)]
    intersect_ok = candidate(0) and not violations

    members = [x for x in points if candidate(x)]
    add_closed = all(candidate(a + b) for a in members for b in members)
    mul_closed = all(candidate(a * b) for a in members for b in members)

    bound = max((abs(x) for x in points), default=0) + 2
    witness = next((x for x in range(bound + 1) if not candidate(x) and not candidate(-x)), None)
    return AxiomReport(
        intersect_ok=intersect_ok,
        add_closed=add_closed,
        mul_closed=mul_closed,
        cone_witness=witness,
        intersect_violation=violations[0] if violations else None,
    )


def _window_integers(window: Window) -> List[int]:
    return list(range(window.lo, window.hi + 1))


def cone_poset_on(spec: ConeSpec, integers: Sequence[int]) -> Poset:
    values = np.array(integers, dtype=np.int64)
    gaps = values[None, :] - values[:, None]
    leq = (gaps >= 0) & (gaps % spec.k == 0)
    return validate_poset(leq)


def cone_membership(spec: ConeSpec) -> PkMembership:
    return PkMembership(spec.k)


def cone_graph_on(spec: ConeSpec, integers: Sequence[int]) -> Graph:
    """Induced subgraph of cone_k(Z) on distinct integers, in the given order."""
    member = cone_membership(spec)
    edges = [
        (a, b)
        for a, b in combinations(range(len(integers)), 2)
        if member(integers[b] - integers[a]) or member(integers[a] - integers[b])
    ]
    return Graph.from_edges(len(integers), edges, [str(x) for x in integers])


def cone_poset(spec: ConeSpec, window: Window) -> Poset:
    return cone_poset_on(spec, _window_integers(window))


def cone_graph(spec: ConeSpec, window: Window) -> Graph:
    """Vertices lo..hi; edge iff a ≡ b (mod k)."""
    return cone_graph_on(spec, _window_integers(window))


def translation_invariant(spec: ConeSpec, window: Window, offset: int) -> bool:
    """Shifting the window only relabels vertices."""
    return cone_graph(spec, window).adjacency == cone_graph(spec, window.shifted(offset)).adjacency


def cone_ramsey(spec: ConeSpec, q: RamseyQuery) -> int:
    """(n-1)(m-1)+1 while m <= k+1, otherwise (n-1)k+1; depends only on n past k+1."""
    if q.m <= spec.k + 1:
        return q.threshold
    return (q.n - 1) * spec.k + 1


def cone_extremal(spec: ConeSpec, q: RamseyQuery) -> List[List[int]]:
    """
    A_i = {k + i, 2k + i, ..., (n-1)k + i} for i = 1..min(m-1, k): residue
    classes of n-1 integers each, cone_ramsey - 1 integers in total.
    Empty when n = 1 or m = 1.
    """
    if q.n == 1 or q.m == 1:
        return []
    classes = q.m - 1 if q.m <= spec.k + 1 else spec.k
    return [[t * spec.k + i for t in range(1, q.n)] for i in range(1, classes + 1)]


def residue_compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Every way to split `total` chosen integers over `parts` residue classes."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in residue_compositions(total - first, parts - 1):
            yield (first,) + rest


def _pattern_passes(counts: Sequence[int], q: RamseyQuery) -> bool:
    """K_n iff some class holds n; an independent m-set iff m classes are hit."""
    return max(counts) >= q.n or sum(1 for c in counts if c) >= q.m


def cone_ramsey_by_patterns(spec: ConeSpec, q: RamseyQuery, limit: int) -> Optional[int]:
    """Least r <= limit for which every residue pattern of r integers passes."""
    for r in range(1, limit + 1):
        if all(_pattern_passes(c, q) for c in residue_compositions(r, spec.k)):
            return r
    return None


def verify_cone(spec: ConeSpec, q: RamseyQuery, max_window: Optional[int] = None) -> VerificationReport:
    """
    Exhaustive check of cone_ramsey at r over residue patterns, plus raw
    r-subsets of [1, r*k] through extract_witness when there are few enough,
    plus the extremal family on r-1 integers.

    Raises:
        CapExceeded when r is above the window cap
    """
    cap = config.CONE_WINDOW_CAP if max_window is None else max_window
    r = cone_ramsey(spec, q)
    if r > cap:
        raise CapExceeded("cone order", r, cap)

    started = time.perf_counter()
    patterns = list(residue_compositions(r, spec.k))
    patterns_pass = all(_pattern_passes(c, q) for c in patterns)
    minimum = cone_ramsey_by_patterns(spec, q, r)
    details = {
        "cone_ramsey": r,
        "patterns": len(patterns),
        "pattern_minimum": minimum,
    }

    # Past k+1 an independent m-set is impossible, so the chain branch of
    # the (n, k+1) witness is the only one that can fire.
    witness_query = q if q.m <= spec.k + 1 else RamseyQuery(q.n, spec.k + 1)
    window = Window(1, r * spec.k)
    raw_total = comb(window.width, r)
    raw_pass = True
    if raw_total <= config.CONE_RAW_SUBSET_CAP:
        poset = cone_poset(spec, window)
        graph = cone_graph(spec, window)
        for subset in combinations(range(window.width), r):
            witness = extract_witness(poset, subset, witness_query)
            if not witness_is_valid(graph, witness, witness_query) or (witness_query is not q and not witness.is_clique):
                raw_pass = False
                break
        details["raw_subsets"] = raw_total
    else:
        details["raw_subsets"] = 0
    details["raw_pass"] = raw_pass

    blocks = cone_extremal(spec, q)
    extremal = cone_graph_on(spec, [x for block in blocks for x in block])
    if extremal.size:
        omega, alpha = clique_number(extremal), independence_number(extremal)
        extremal_ok = extremal.size == r - 1 and omega < q.n and alpha < q.m
        details.update(extremal_clique=omega, extremal_independence=alpha)
    else:
        extremal_ok = r == 1
    details.update(extremal_order=extremal.size, extremal_avoids_both=extremal_ok)

    all_pass = patterns_pass and minimum == r and raw_pass and extremal_ok
    logger.debug(f"{'✅' if all_pass else '❌'} verify-cone k={spec.k} {q.description}: r={r}")
    return VerificationReport(
        query=q,
        order=r,
        enumerated=len(patterns),
        all_pass=all_pass,
        counterexample=None,
        elapsed_ms=(time.perf_counter() - started) * 1000,
        details=details,
    )

