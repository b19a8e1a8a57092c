import logging
from typing import List, Optional, Tuple

from recoloureur.colouring.colouring_base import Colouring, is_proper
from recoloureur.errors import ImproperColouring, LengthMismatch, NotChordal, PaletteTooSmall
from recoloureur.graph.graph_base import Graph, build_graph
from recoloureur.graph.graph_chordal import chordal_clique_number, chordal_elimination_order
from recoloureur.graph.graph_induced import find_induced_copy
from recoloureur.recolour.recolour_path import PathBuilder, RecolourPath

logger = logging.getLogger(__name__)


def _hole(g: Graph) -> Optional[List[int]]:
    """
    Shortest induced cycle of length at least 4.
    """
    for k in range(4, g.vertex_count + 1):
        cycle = build_graph(k, [(i, (i + 1) % k) for i in range(k)])
        found = find_induced_copy(g, cycle)
        if found is not None:
            return found
    return None


def chordal_steps(g: Graph, palette: int, a: Colouring, b: Colouring,
                  order: List[int]) -> List[Tuple[int, int]]:
    """
    Builds the recolouring by adding vertices in reverse elimination order.

    When vertex v joins, v is simplicial in the graph built so far. The path
    for the smaller graph is replayed; whenever a neighbour u of v is about
    to take v's colour, v first moves to the lowest colour absent from its
    neighbourhood and distinct from u's new colour. At most omega(g)
    colours are blocked, so palette >= omega + 1 always leaves one. Finally v
    takes b[v].
    """
    steps: List[Tuple[int, int]] = []
    present = set()
    for v in reversed(order):
        current = {u: a[u] for u in present}
        colour_v = a[v]
        replayed: List[Tuple[int, int]] = []
        for u, c in steps:
            if colour_v == c and g.has_edge(u, v):
                blocked = {current[w] for w in g.neighbours(v) if w in present}
                blocked.add(c)
                colour_v = next(d for d in range(1, palette + 1) if d not in blocked)
                replayed.append((v, colour_v))
            replayed.append((u, c))
            current[u] = c
        if colour_v != b[v]:
            replayed.append((v, b[v]))
        steps = replayed
        present.add(v)
    return steps


def recolour_chordal(g: Graph, palette: int, a: Colouring, b: Colouring) -> RecolourPath:
    """
    Recolours a into b on a chordal graph with palette >= omega(g) + 1.
    """
    if len(a) != g.vertex_count or len(b) != g.vertex_count:
        raise LengthMismatch("colourings and graph differ in size")
    order = chordal_elimination_order(g)
    if order is None:
        hole = _hole(g)
        raise NotChordal(f"graph has an induced cycle on {hole}", f"C{len(hole)}" if hole else None, hole)
    if not is_proper(g, a) or not is_proper(g, b):
        raise ImproperColouring("both endpoints must be proper")
    omega = chordal_clique_number(g, order)
    if palette < omega + 1 or any(c > palette for c in a.colours + b.colours):
        raise PaletteTooSmall(f"palette {palette} is below omega + 1 = {omega + 1}")
    builder = PathBuilder(g, a, palette)
    with builder.phase("simplicial_lift"):
        builder.extend(chordal_steps(g, palette, a, b, order))
    return builder.build()


class RecolourChordal:
    algorithm_name = "chordal"
    graph_class = "chordal"

    def accepts(self, g: Graph) -> Tuple[str, str, bool]:
        return self.graph_class, self.algorithm_name, chordal_elimination_order(g) is not None

    def recolour(self, g: Graph, palette: int, a: Colouring, b: Colouring) -> RecolourPath:
        return recolour_chordal(g, palette, a, b)
