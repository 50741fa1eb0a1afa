from typing import Iterator, Tuple

from src.machine.vector_context import VectorContext


def strip_mine(ctx: VectorContext, n: int) -> Iterator[Tuple[int, int]]:
    """
    Yield (start, vl) strips covering n elements.

    Each strip asks the context for its vector length, so every strip costs
    one set_vl. An empty loop (n == 0) issues nothing.
    """
    start = 0
    while start < n:
        vl = ctx.set_vl(n - start)
        yield start, vl
        start += vl
