import logging
from typing import List, Optional, Tuple

import networkx as nx

from recoloureur.colouring.colouring_base import Colouring
from recoloureur.config import DEFAULT_EXACT_BOUND
from recoloureur.errors import Not3K1Free, NotP3Free, TooLarge
from recoloureur.graph.graph_base import Graph, component_masks, complement, iter_bits
from recoloureur.validator import Validator

logger = logging.getLogger(__name__)


# ---------------------------------------------------------
# Cliques
# ---------------------------------------------------------

def max_clique(g: Graph) -> List[int]:
    """
    Maximum clique by branch and bound over bit sets.
    """
    best = [0]

    def grow(current: int, candidates: int) -> None:
        size = bin(current).count("1")
        if size + bin(candidates).count("1") <= bin(best[0]).count("1"):
            return
        if not candidates:
            best[0] = current
            return
        while candidates:
            if size + bin(candidates).count("1") <= bin(best[0]).count("1"):
                return
            v = candidates.bit_length() - 1
            candidates &= ~(1 << v)
            grow(current | (1 << v), candidates & g.mask(v))

    grow(0, g.all_mask)
    return sorted(iter_bits(best[0]))


def clique_number(g: Graph) -> int:
    return len(max_clique(g))


# ---------------------------------------------------------
# Exact colouring
# ---------------------------------------------------------

def is_k_colourable(g: Graph, k: int) -> Optional[Colouring]:
    """
    Decides k-colourability by backtracking, most constrained vertex first
    (fewest available colours, then highest degree, then lowest index).
    Returns a witness colouring or None.
    """
    n = g.vertex_count
    if n == 0:
        return Colouring((), max(k, 1))
    if k <= 0:
        return None
    colours = [0] * n
    degrees = g.degrees()

    def forbidden(v: int) -> int:
        seen = 0
        for u in iter_bits(g.mask(v)):
            if colours[u]:
                seen |= 1 << colours[u]
        return seen

    def pick() -> int:
        best, best_key = -1, None
        for v in range(n):
            if colours[v]:
                continue
            options = k - bin(forbidden(v)).count("1")
            key = (options, -degrees[v], v)
            if best_key is None or key < best_key:
                best, best_key = v, key
        return best

    def solve(assigned: int, highest: int) -> bool:
        if assigned == n:
            return True
        v = pick()
        blocked = forbidden(v)
        # symmetry: a fresh colour is only ever the next unused one
        for c in range(1, min(k, highest + 1) + 1):
            if blocked >> c & 1:
                continue
            colours[v] = c
            if solve(assigned + 1, max(highest, c)):
                return True
        colours[v] = 0
        return False

    if solve(0, 0):
        return Colouring(tuple(colours), k)
    return None


def chromatic_number_exact(g: Graph, bound: int = DEFAULT_EXACT_BOUND) -> Tuple[int, Colouring]:
    """
    Chromatic number by iterative deepening from the clique number.
    Returns chi(g) and a proper colouring using exactly chi(g) colours.
    """
    if g.vertex_count > bound:
        raise TooLarge(f"{g.vertex_count} vertices exceeds the exact-solver bound {bound}")
    if g.vertex_count == 0:
        return 0, Colouring((), 1)
    k = clique_number(g)
    while True:
        witness = is_k_colourable(g, k)
        if witness is not None:
            logger.debug("chromatic number %d on %d vertices", k, g.vertex_count)
            return k, witness
        k += 1


def _canonical(classes: List[List[int]], n: int) -> Colouring:
    colours = [0] * n
    for colour, members in enumerate(sorted(classes, key=min), start=1):
        for v in members:
            colours[v] = colour
    return Colouring(tuple(colours), max(len(classes), 1))


# ---------------------------------------------------------
# Polynomial special cases
# ---------------------------------------------------------

def chi_3k1_free(g: Graph) -> Tuple[int, Colouring]:
    """
    Colour classes of a 3K1-free graph have at most two vertices, so
    chi(g) = n - mu(complement(g)). Matched pairs become the colour classes.
    """
    witness = Validator().witness(g, "3K1")
    if witness is not None:
        raise Not3K1Free("graph has an independent triple", "3K1", witness)
    n = g.vertex_count
    co = complement(g)
    nxg = nx.Graph()
    nxg.add_nodes_from(range(n))
    nxg.add_edges_from(co.edges())
    matching = nx.max_weight_matching(nxg, maxcardinality=True)
    matched = set()
    classes: List[List[int]] = []
    for u, v in sorted(tuple(sorted(e)) for e in matching):
        classes.append([u, v])
        matched.update((u, v))
    classes.extend([v] for v in range(n) if v not in matched)
    if n == 0:
        return 0, Colouring((), 1)
    return len(classes), _canonical(classes, n)


def chi_p3_free(g: Graph) -> Tuple[int, Colouring]:
    """
    A P3-free graph is a disjoint union of cliques; each clique is coloured
    1..|clique| in index order.
    """
    witness = Validator().witness(g, "P3")
    if witness is not None:
        raise NotP3Free("graph has an induced P3", "P3", witness)
    n = g.vertex_count
    if n == 0:
        return 0, Colouring((), 1)
    colours = [0] * n
    chi = 0
    for comp in component_masks(g):
        members = list(iter_bits(comp))
        chi = max(chi, len(members))
        for colour, v in enumerate(members, start=1):
            colours[v] = colour
    return chi, Colouring(tuple(colours), chi)
