import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from recoloureur.colouring.colouring_base import Colouring, is_frozen, is_proper
from recoloureur.errors import BadParams
from recoloureur.graph.graph_base import Graph, build_graph
from recoloureur.validator import Validator

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WitnessBundle:
    """
    A frozen-colouring witness: the graph, a chi-colouring of it, a frozen
    colouring with more colours, and the catalogue graphs it avoids.
    """
    name: str
    graph: Graph
    base_colouring: Colouring
    frozen_colouring: Optional[Colouring]
    claimed_free_of: List[str] = field(default_factory=list)

    def verify(self) -> Dict[str, bool]:
        """
        Runs every self-check; a bundle is sound when all values are True.
        """
        checks = {"base_proper": is_proper(self.graph, self.base_colouring)}
        if self.frozen_colouring is not None:
            checks["frozen_proper"] = is_proper(self.graph, self.frozen_colouring)
            checks["frozen"] = checks["frozen_proper"] and is_frozen(self.graph, self.frozen_colouring)
        validator = Validator()
        for name in self.claimed_free_of:
            checks[f"{name}-free"] = validator.is_free(self.graph, name)
        failed = [k for k, ok in checks.items() if not ok]
        if failed:
            logger.warning("witness %s fails %s", self.name, failed)
        return checks

    def is_sound(self) -> bool:
        return all(self.verify().values())


# ---------------------------------------------------------
# G_p: C6 with every vertex blown up into K_p
# ---------------------------------------------------------

GP_FREE_OF = ["4K1", "C4", "claw"]
BP_FREE_OF = ["K4", "diamond", "paw", "co-claw", "co-diamond"]


def gen_gp(p: int) -> WitnessBundle:
    """
    Hexagon part j holds vertices j*p .. j*p+p-1. Opposite parts share a
    colour block in the frozen 3p-colouring, so each vertex sees all 3p
    colours in its closed neighbourhood.
    """
    if p < 1:
        raise BadParams(f"G_p needs p >= 1, got {p}")
    edges = []
    for j in range(6):
        part = range(j * p, j * p + p)
        following = range(((j + 1) % 6) * p, ((j + 1) % 6) * p + p)
        edges.extend((u, v) for u in part for v in part if u < v)
        edges.extend((u, v) for u in part for v in following)
    graph = build_graph(6 * p, edges)
    frozen_blocks = [2 * p, p, 0, 2 * p, p, 0]
    base = [(j % 2) * p + t + 1 for j in range(6) for t in range(p)]
    frozen = [frozen_blocks[j] + t + 1 for j in range(6) for t in range(p)]
    return WitnessBundle(f"G_{p}", graph, Colouring(tuple(base), 2 * p),
                         Colouring(tuple(frozen), 3 * p), list(GP_FREE_OF))


# ---------------------------------------------------------
# B_p: K_{p,p} minus a perfect matching
# ---------------------------------------------------------

def gen_bp(p: int) -> WitnessBundle:
    """
    Left side 0..p-1, right side p..2p-1; i and p+i are the removed matching
    pair and share colour i+1 in the frozen p-colouring.
    """
    if p < 3:
        raise BadParams(f"B_p needs p >= 3, got {p}")
    graph = build_graph(2 * p, [(u, p + v) for u in range(p) for v in range(p) if u != v])
    base = [1] * p + [2] * p
    frozen = [i + 1 for i in range(p)] * 2
    return WitnessBundle(f"B_{p}", graph, Colouring(tuple(base), 2),
                         Colouring(tuple(frozen), p), list(BP_FREE_OF))


def pendant_extension(h: Graph, i: int) -> Graph:
    """
    Adds pendant vertices u_1..u_i with u_j adjacent to v_j only; u_j gets
    index |V(h)| + j - 1.
    """
    n = h.vertex_count
    if not 1 < i <= n:
        raise BadParams(f"pendant extension needs 1 < i <= {n}, got {i}")
    return build_graph(n + i, h.edges() + [(j, n + j) for j in range(i)])
