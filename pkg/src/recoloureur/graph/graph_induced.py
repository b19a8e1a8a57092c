from typing import List, Optional, Tuple

from recoloureur.graph.graph_base import Graph, build_graph, iter_bits


def _pattern_order(h: Graph) -> List[int]:
    """
    Orders pattern vertices so that each one has as many already-placed
    neighbours as possible (ties: higher degree, then lower index). Early
    adjacency constraints prune the host candidates fastest.
    """
    order: List[int] = []
    placed = 0
    remaining = set(h.vertices())
    while remaining:
        best = min(
            remaining,
            key=lambda v: (-bin(h.mask(v) & placed).count("1"), -h.degree(v), v),
        )
        order.append(best)
        placed |= 1 << best
        remaining.remove(best)
    return order


def find_induced_copy(g: Graph, h: Graph) -> Optional[List[int]]:
    """
    Searches g for an induced copy of h.

    Returns phi with phi[i] the host vertex playing pattern vertex i, or None.
    Backtracking visits host candidates lowest index first, so the witness
    is deterministic.
    """
    n, k = g.vertex_count, h.vertex_count
    if k == 0:
        return []
    if k > n:
        return None

    order = _pattern_order(h)
    host_all = g.all_mask
    host_deg = g.degrees()
    pat_deg = h.degrees()

    # degree pruning: a host vertex needs at least the pattern's degree and co-degree
    admissible = []
    for i in range(k):
        m = 0
        for x in range(n):
            if host_deg[x] >= pat_deg[i] and (n - 1 - host_deg[x]) >= (k - 1 - pat_deg[i]):
                m |= 1 << x
        admissible.append(m)

    phi = [-1] * k

    def candidates(depth: int, used: int) -> int:
        i = order[depth]
        cand = admissible[i] & ~used
        for j in order[:depth]:
            x = phi[j]
            if h.has_edge(i, j):
                cand &= g.mask(x)
            else:
                cand &= host_all & ~g.mask(x) & ~(1 << x)
            if not cand:
                break
        return cand

    def extend(depth: int, used: int) -> bool:
        if depth == k:
            return True
        i = order[depth]
        for x in iter_bits(candidates(depth, used)):
            phi[i] = x
            if extend(depth + 1, used | (1 << x)):
                return True
        phi[i] = -1
        return False

    return list(phi) if extend(0, 0) else None


def is_h_free(g: Graph, h: Graph) -> bool:
    return find_induced_copy(g, h) is None


def verify_induced_copy(g: Graph, h: Graph, phi: List[int]) -> bool:
    """
    Re-checks every pattern pair under phi (edges and non-edges).
    """
    if len(phi) != h.vertex_count or len(set(phi)) != len(phi):
        return False
    return all(
        g.has_edge(phi[i], phi[j]) == h.has_edge(i, j)
        for i in range(len(phi)) for j in range(i + 1, len(phi))
    )


_C5 = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])


def find_induced_c5(g: Graph) -> Optional[Tuple[int, int, int, int, int]]:
    """
    Returns v1..v5 in cycle order inducing a chordless 5-cycle, or None.
    """
    phi = find_induced_copy(g, _C5)
    return tuple(phi) if phi is not None else None
