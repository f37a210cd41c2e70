from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, TypeVar

Item = TypeVar("Item")
Result = TypeVar("Result")


def parallel_map(fn: Callable[[Item], Result], items: Iterable[Item], jobs: int = 1) -> List[Result]:
    """
    Map fn over items, optionally on a process pool.

    Results come back in input order, so callers that merge them get the same
    output whatever the worker scheduling. fn must be picklable (module level).

    Args:
        fn: Function applied to each item
        items: Work items
        jobs: Number of worker processes; 1 or less runs inline

    Returns:
        List of results in input order
    """
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=min(jobs, len(items))) as executor:
        return list(executor.map(fn, items))
