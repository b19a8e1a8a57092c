from typing import List, Sequence, Tuple

from recoloureur.errors import InternalInvariantViolation, InvalidSeed
from recoloureur.graph.graph_base import Graph, Partition, VertexSet, mask_of


def _induces_c5(g: Graph, seed: Sequence[int]) -> bool:
    if len(seed) != 5 or len(set(seed)) != 5:
        return False
    if not all(0 <= v < g.vertex_count for v in seed):
        return False
    for i in range(5):
        for j in range(i + 1, 5):
            consecutive = (j - i) in (1, 4)
            if g.has_edge(seed[i], seed[j]) != consecutive:
                return False
    return True


def is_c5_blowup(g: Graph, parts: Sequence[VertexSet]) -> bool:
    """
    Checks that the five cliques are complete to their cyclic neighbours and
    anticomplete to the other two parts.
    """
    if len(parts) != 5 or any(not p for p in parts):
        return False
    for i in range(5):
        if not g.is_clique(parts[i]):
            return False
        if not g.is_complete_to(parts[i], parts[(i + 1) % 5]):
            return False
        if not g.is_anticomplete_to(parts[i], parts[(i + 2) % 5]):
            return False
    return True


def maximal_c5_blowup(g: Graph, seed: Sequence[int]) -> Tuple[VertexSet, Partition]:
    """
    Grows the induced C5 `seed` into a maximal blow-up of C5.

    Vertices are tried once each in increasing index order; u joins part A_i
    when it is complete to A_{i-1}, A_i and A_{i+1} and anticomplete to the
    other two parts (lowest i wins). Adding vertices only tightens these
    conditions, so one pass reaches a maximal set.

    Returns the vertex set C and the parts A_1..A_5 in cycle order.
    """
    if not _induces_c5(g, seed):
        raise InvalidSeed(f"seed {list(seed)} does not induce C5")

    parts: List[set] = [{v} for v in seed]
    members = set(seed)
    for u in g.vertices():
        if u in members:
            continue
        adj = g.mask(u)
        for i in range(5):
            near = parts[(i - 1) % 5] | parts[i] | parts[(i + 1) % 5]
            far = parts[(i + 2) % 5] | parts[(i + 3) % 5]
            near_mask, far_mask = mask_of(near), mask_of(far)
            if adj & near_mask == near_mask and adj & far_mask == 0:
                parts[i].add(u)
                members.add(u)
                break

    frozen = [frozenset(p) for p in parts]
    if not is_c5_blowup(g, frozen):
        raise InternalInvariantViolation("absorbed set is not a blow-up of C5")
    return frozenset(members), Partition(tuple(frozen))
