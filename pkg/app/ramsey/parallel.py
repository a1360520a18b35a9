"""
Order-preserving parallel map over deterministic shards.
"""
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Optional, Sequence, TypeVar

from app.core import config
from app.core.logging import get_logger

logger = get_logger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def resolve_workers(workers: Optional[int]) -> int:
    return max(1, config.RAMSEY_WORKERS if workers is None else workers)


def run_shards(fn: Callable[[T], R], shards: Sequence[T], workers: Optional[int] = None) -> List[R]:
    """
    Apply fn to every shard and return results in shard order, whatever the
    worker count. fn must be a module-level function so it pickles.
    """
    count = resolve_workers(workers)
    if count <= 1 or len(shards) <= 1:
        return [fn(shard) for shard in shards]
    logger.debug(f"⚙️ {len(shards)} shards on {count} workers")
    with ProcessPoolExecutor(max_workers=min(count, len(shards))) as pool:
        return list(pool.map(fn, shards))
