import logging
from typing import Iterator, List, Sequence, Tuple

import numpy as np

from recoloureur.colouring.colouring_base import Colouring
from recoloureur.config import DEFAULT_STATE_BUDGET
from recoloureur.errors import BadParams, BudgetExceeded
from recoloureur.graph.graph_base import Graph

logger = logging.getLogger(__name__)

# A StateKey packs colouring c as sum((c[i] - 1) * l**i): vertex 0 is the
# least significant digit, so keys are a bijection onto [0, l**n).


def state_space_size(n: int, palette: int) -> int:
    return palette ** n


def check_budget(n: int, palette: int, budget: int) -> int:
    if palette < 1:
        raise BadParams("palette must be at least 1")
    size = state_space_size(n, palette)
    if size > budget:
        raise BudgetExceeded(size, budget)
    return size


def encode(colours: Sequence[int], palette: int) -> int:
    key = 0
    for c in reversed(colours):
        key = key * palette + (c - 1)
    return key


def decode(key: int, n: int, palette: int) -> List[int]:
    colours = []
    for _ in range(n):
        key, digit = divmod(key, palette)
        colours.append(digit + 1)
    return colours


def proper_keys(g: Graph, palette: int) -> Iterator[int]:
    """
    Yields the keys of all proper colourings in increasing order.

    Vertices are assigned from the most significant (n-1) down to 0 with
    colours ascending, which is exactly increasing key order.
    """
    n = g.vertex_count
    if n == 0:
        yield 0
        return
    powers = [palette ** i for i in range(n)]
    colours = [0] * n
    # neighbours already assigned when v is reached: those with larger index
    higher = [[u for u in range(v + 1, n) if g.has_edge(u, v)] for v in range(n)]

    def assign(v: int, key: int) -> Iterator[int]:
        for c in range(1, palette + 1):
            if any(colours[u] == c for u in higher[v]):
                continue
            colours[v] = c
            partial = key + (c - 1) * powers[v]
            if v == 0:
                yield partial
            else:
                yield from assign(v - 1, partial)
        colours[v] = 0

    yield from assign(n - 1, 0)


def enumerate_proper(g: Graph, palette: int,
                     budget: int = DEFAULT_STATE_BUDGET) -> Tuple[int, Iterator[Colouring]]:
    """
    Counts the proper palette-colourings of g and iterates them in
    increasing StateKey order.
    """
    check_budget(g.vertex_count, palette, budget)
    keys = np.fromiter(proper_keys(g, palette), dtype=np.int64)
    logger.debug("%d proper %d-colourings of %r", len(keys), palette, g)
    n = g.vertex_count

    def colourings() -> Iterator[Colouring]:
        for key in keys:
            yield Colouring(tuple(decode(int(key), n, palette)), palette)

    return int(len(keys)), colourings()
