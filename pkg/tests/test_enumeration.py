"""
Tests for labeled poset enumeration, random posets and the shard runner.
"""
import numpy as np
import pytest

from app.order.enumeration import (
    KNOWN_LABELED_POSET_COUNTS,
    count_labeled_posets,
    iter_labeled_posets,
    iter_labeled_relations,
    random_poset,
)
from app.order.poset import poset_from_down_sets, validate_poset
from app.ramsey.parallel import resolve_workers, run_shards


def _square(x):
    return x * x


@pytest.mark.parametrize("size", [1, 2, 3, 4, 5])
def test_labeled_poset_counts(size):
    """Counts match 1, 3, 19, 219, 4231."""
    assert count_labeled_posets(size) == KNOWN_LABELED_POSET_COUNTS[size]


def test_every_enumerated_relation_is_a_distinct_poset():
    """Each output passes validation and none repeats, on 4 elements."""
    seen = set()
    for down in iter_labeled_posets(4):
        p = poset_from_down_sets(down)
        validate_poset(p.leq)
        seen.add(down)
    assert len(seen) == 219


def test_up_sets_mirror_down_sets():
    """iter_labeled_relations yields consistent down/up masks."""
    for down, up in iter_labeled_relations(4):
        for a in range(4):
            for b in range(4):
                assert bool((down[b] >> a) & 1) == bool((up[a] >> b) & 1)


def test_prefix_shards_partition_the_enumeration():
    """Sharding by the poset on the first 2 elements covers each poset once."""
    total = sum(
        sum(1 for _ in iter_labeled_posets(4, prefix))
        for prefix in iter_labeled_posets(2)
    )
    assert total == 219


def test_prefix_longer_than_size_is_rejected():
    """A prefix cannot have more elements than the poset."""
    with pytest.raises(ValueError):
        list(iter_labeled_relations(1, (0, 0)))


def test_random_poset_is_valid_and_seeded():
    """Random posets pass validation and repeat under the same seed."""
    first = random_poset(np.random.default_rng(7), 12, 0.4)
    second = random_poset(np.random.default_rng(7), 12, 0.4)
    assert first == second
    validate_poset(first.leq)
    assert first.size == 12


def test_random_poset_density_extremes():
    """Density 0 gives an antichain, density 1 a chain."""
    flat = random_poset(np.random.default_rng(1), 6, 0.0)
    assert not any(flat.down)
    tall = random_poset(np.random.default_rng(1), 6, 1.0)
    assert sorted(bin(mask).count("1") for mask in tall.down) == list(range(6))


def test_run_shards_preserves_order():
    """Results come back in shard order for inline and pooled runs."""
    shards = list(range(10))
    assert run_shards(_square, shards, workers=1) == [x * x for x in shards]
    assert run_shards(_square, shards, workers=2) == [x * x for x in shards]


def test_resolve_workers_floor():
    """Worker counts below one run inline."""
    assert resolve_workers(0) == 1
    assert resolve_workers(3) == 3
