import logging
from itertools import combinations
from typing import List, Optional, Tuple

from recoloureur.graph.graph_base import Graph, VertexSet, iter_bits

logger = logging.getLogger(__name__)

EXHAUSTIVE_SPLIT_LIMIT = 20


# ---------------------------------------------------------
# Perfect elimination orderings
# ---------------------------------------------------------

def lex_bfs(g: Graph) -> List[int]:
    """
    Lexicographic breadth-first search; ties go to the lowest index.
    """
    n = g.vertex_count
    labels: List[List[int]] = [[] for _ in range(n)]
    visited = [False] * n
    order: List[int] = []
    for step in range(n):
        best = -1
        for v in range(n):
            if not visited[v] and (best < 0 or labels[v] > labels[best]):
                best = v
        visited[best] = True
        order.append(best)
        for u in iter_bits(g.mask(best)):
            if not visited[u]:
                labels[u].append(n - step)
    return order


def is_perfect_elimination_order(g: Graph, order: List[int]) -> bool:
    """
    True iff every vertex's later neighbours in `order` form a clique.
    """
    later = 0
    for v in reversed(order):
        if not g.is_clique(iter_bits(g.mask(v) & later)):
            return False
        later |= 1 << v
    return True


def chordal_elimination_order(g: Graph) -> Optional[List[int]]:
    """
    Returns a perfect elimination ordering of g, or None if g is not chordal.

    The candidate is the reverse of a Lex-BFS order and is only returned after
    the later-neighbourhood check passes.
    """
    candidate = list(reversed(lex_bfs(g)))
    if is_perfect_elimination_order(g, candidate):
        return candidate
    return None


def is_chordal(g: Graph) -> bool:
    return chordal_elimination_order(g) is not None


def chordal_clique_number(g: Graph, order: List[int]) -> int:
    """
    Clique number of a chordal graph read off one of its elimination orders.
    """
    best = 0
    later = 0
    for v in reversed(order):
        best = max(best, bin(g.mask(v) & later).count("1") + 1)
        later |= 1 << v
    return best


# ---------------------------------------------------------
# Split graphs
# ---------------------------------------------------------

def _is_split_pair(g: Graph, q: VertexSet, i: VertexSet) -> bool:
    return (len(q) + len(i) == g.vertex_count and not (q & i)
            and g.is_clique(q) and g.is_independent(i))


def _degree_sequence_split(g: Graph) -> Optional[Tuple[VertexSet, VertexSet]]:
    """
    Hammer-Simeone test: with degrees d1 >= ... >= dn and m = max{i : d_i >= i-1},
    g is split iff sum(d_1..d_m) = m(m-1) + sum(d_{m+1}..d_n).
    """
    order = sorted(g.vertices(), key=lambda v: (-g.degree(v), v))
    degs = [g.degree(v) for v in order]
    m = 0
    for idx, d in enumerate(degs, start=1):
        if d >= idx - 1:
            m = idx
    if sum(degs[:m]) != m * (m - 1) + sum(degs[m:]):
        return None
    return frozenset(order[:m]), frozenset(order[m:])


def _exhaustive_split(g: Graph) -> Optional[Tuple[VertexSet, VertexSet]]:
    vertices = list(g.vertices())
    for size in range(len(vertices), -1, -1):
        for q in combinations(vertices, size):
            qs = frozenset(q)
            if _is_split_pair(g, qs, frozenset(vertices) - qs):
                return qs, frozenset(vertices) - qs
    return None


def _repair_to_maximum(g: Graph, q: VertexSet, i: VertexSet) -> Tuple[VertexSet, VertexSet]:
    """
    Moves Q-vertices with a non-neighbour in Q out to I, then swaps in every
    I-vertex complete to Q (lowest index first). A split partition with no
    I-vertex complete to Q has Q maximum.
    """
    q_set, i_set = set(q), set(i)
    for v in sorted(q_set):
        if not g.is_complete_to([v], q_set - {v}):
            q_set.discard(v)
            i_set.add(v)
    for v in sorted(i_set):
        if g.is_complete_to([v], q_set):
            i_set.discard(v)
            q_set.add(v)
    return frozenset(q_set), frozenset(i_set)


def split_partition(g: Graph) -> Optional[Tuple[VertexSet, VertexSet]]:
    """
    Splits V(g) into a maximum clique Q and an independent set I, or returns
    None when g is not a split graph.
    """
    found = _degree_sequence_split(g)
    if found is None:
        return None
    q, i = _repair_to_maximum(g, *found)
    if _is_split_pair(g, q, i):
        return q, i
    logger.warning("degree-sequence split partition failed verification; searching exhaustively")
    if g.vertex_count > EXHAUSTIVE_SPLIT_LIMIT:
        return None
    found = _exhaustive_split(g)
    if found is None:
        return None
    q, i = _repair_to_maximum(g, *found)
    return (q, i) if _is_split_pair(g, q, i) else None
