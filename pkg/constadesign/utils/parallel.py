"""Range partitioning and an ordered process-pool map for bulk enumeration."""
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Sequence, Tuple, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def split_range(total: int, parts: int) -> List[Tuple[int, int]]:
    """Split [0, total) into at most `parts` contiguous (start, stop) ranges; the last absorbs the remainder"""
    parts = max(1, min(parts, total)) if total else 1
    step = total // parts
    ranges = []
    for rank in range(parts):
        start, stop = rank * step, (rank + 1) * step
        if rank == parts - 1:
            stop = total
        ranges.append((start, stop))
    return ranges


def run_tasks(func: Callable[[T], R], tasks: Sequence[T], workers: int = 1) -> List[R]:
    """Apply func to every task; results come back in task order whatever the worker count"""
    if workers <= 1 or len(tasks) <= 1:
        return [func(task) for task in tasks]
    logger.debug("Dispatching %d tasks to %d workers", len(tasks), workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, tasks))
