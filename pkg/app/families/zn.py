"""
Divisibility graph and inclusion ideal graph of Z_n.
"""
from itertools import combinations
from math import gcd
from typing import FrozenSet, List

import numpy as np

from app.core.errors import InvalidInput, ModulusMismatch, NoNontrivialIdeals, NoProperElements
from app.models.graph import Graph
from app.models.poset import Poset
from app.models.rings import ZnElement
from app.order.poset import validate_poset
from app.utils.numbers import divides, divisors


def _check_modulus(n: int) -> None:
    if n < 2:
        raise InvalidInput(f"Modulus must be >= 2, got {n}")


def divides_zn(a: ZnElement, b: ZnElement) -> bool:
    """a | b in Z_n iff gcd(a, n) divides b."""
    if a.modulus != b.modulus:
        raise ModulusMismatch(a.modulus, b.modulus)
    return b.value % gcd(a.value, a.modulus) == 0


def multiples_zn(n: int, a: int) -> FrozenSet[int]:
    """{a·x mod n : x in Z_n}, the principal ideal aZ_n."""
    return frozenset(a * x % n for x in range(n))


def divides_zn_by_search(a: ZnElement, b: ZnElement) -> bool:
    """a | b in Z_n by trying every multiplier."""
    if a.modulus != b.modulus:
        raise ModulusMismatch(a.modulus, b.modulus)
    return b.value in multiples_zn(a.modulus, a.value)


def strictly_divides_zn(a: ZnElement, b: ZnElement) -> bool:
    return divides_zn(a, b) and not divides_zn(b, a)


def proper_elements(n: int) -> List[ZnElement]:
    _check_modulus(n)
    return [e for e in (ZnElement(n, x) for x in range(1, n)) if e.is_proper]


def divisibility_poset_zn(n: int) -> Poset:
    """a <= b iff a = b or a || b on the proper elements."""
    elements = proper_elements(n)
    if not elements:
        raise NoProperElements(n)
    size = len(elements)
    leq = np.eye(size, dtype=bool)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            if i != j and strictly_divides_zn(a, b):
                leq[i, j] = True
    return validate_poset(leq)


def divisibility_graph_zn(n: int) -> Graph:
    """
    Vertices are the proper elements of Z_n in increasing order; edge iff
    strict one-way divisibility in either direction.

    Raises:
        NoProperElements when n is prime
    """
    elements = proper_elements(n)
    if not elements:
        raise NoProperElements(n)
    edges = [
        (i, j)
        for i, j in combinations(range(len(elements)), 2)
        if strictly_divides_zn(elements[i], elements[j]) or strictly_divides_zn(elements[j], elements[i])
    ]
    return Graph.from_edges(len(elements), edges, [str(e.value) for e in elements])


def nontrivial_ideal_generators(n: int) -> List[int]:
    _check_modulus(n)
    return [d for d in divisors(n) if 1 < d < n]


def ideal_residues(n: int, d: int) -> FrozenSet[int]:
    """The ideal dZ_n as a residue set."""
    return multiples_zn(n, d)


def inclusion_poset_zn(n: int) -> Poset:
    """Non-trivial ideals dZ_n ordered by inclusion of their residue sets."""
    generators = nontrivial_ideal_generators(n)
    if not generators:
        raise NoNontrivialIdeals(n)
    ideals = [ideal_residues(n, d) for d in generators]
    leq = np.array([[a <= b for b in ideals] for a in ideals], dtype=bool)
    return validate_poset(leq)


def inclusion_ideal_graph_zn(n: int) -> Graph:
    """
    Vertices are the divisors 1 < d < n standing for dZ_n; edge iff one ideal
    contains the other.

    Raises:
        NoNontrivialIdeals when n is prime
    """
    generators = nontrivial_ideal_generators(n)
    if not generators:
        raise NoNontrivialIdeals(n)
    edges = [
        (i, j)
        for i, j in combinations(range(len(generators)), 2)
        if divides(generators[i], generators[j]) or divides(generators[j], generators[i])
    ]
    return Graph.from_edges(len(generators), edges, [str(d) for d in generators])


def containment_matches_divisibility(n: int) -> bool:
    """dZ_n contains eZ_n exactly when d | e, for every pair of non-trivial ideals."""
    generators = nontrivial_ideal_generators(n)
    return all(
        (ideal_residues(n, e) <= ideal_residues(n, d)) == divides(d, e)
        for d in generators
        for e in generators
    )
