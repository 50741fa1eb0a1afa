"""
Thread pool helpers that preserve contextvars in worker threads.

Problem:
    ThreadPoolExecutor.submit() runs the callable in the worker thread's own
    context, so contextvars (like the app logger) set by the caller are lost.

Solution:
    Copy the caller's context at submit time and run the callable inside it.

Usage:
    from src.utils.thread_context import submit_with_context
    with ThreadPoolExecutor(max_workers=4) as pool:
        future = submit_with_context(pool, run_point, point)
"""
from concurrent.futures import Executor, Future
from contextvars import copy_context
from typing import Callable, Iterable, List, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def submit_with_context(executor: Executor, fn: Callable[..., R], *args, **kwargs) -> Future:
    """
    Submit a callable that runs inside a copy of the current context.

    Args:
        executor: The executor to submit to
        fn: The callable to run
        *args, **kwargs: Forwarded to fn

    Returns:
        Future: The future for the submitted call
    """
    context = copy_context()
    return executor.submit(context.run, fn, *args, **kwargs)


def map_with_context(executor: Executor, fn: Callable[[T], R], items: Iterable[T]) -> List[R]:
    """Run fn over items on the executor, keeping input order in the result."""
    futures = [submit_with_context(executor, fn, item) for item in items]
    return [future.result() for future in futures]
