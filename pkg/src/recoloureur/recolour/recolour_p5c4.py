import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from recoloureur.colouring.colouring_base import Colouring, is_proper
from recoloureur.config import Settings
from recoloureur.errors import (
    BlowupBaseTooLarge,
    BudgetExceeded,
    Disconnected,
    ImproperColouring,
    InternalInvariantViolation,
    LengthMismatch,
    NotTight,
    PaletteTooSmall,
)
from recoloureur.graph.graph_base import Graph, component_masks, is_connected, iter_bits, mask_of
from recoloureur.graph.graph_blowup import maximal_c5_blowup
from recoloureur.graph.graph_chordal import chordal_clique_number, chordal_elimination_order
from recoloureur.graph.graph_induced import find_induced_c5
from recoloureur.oracle.oracle_mixing import oracle_path
from recoloureur.oracle.oracle_states import state_space_size
from recoloureur.recolour.recolour_chordal import chordal_steps
from recoloureur.recolour.recolour_p3p1 import optimal_anticomponent_colourings, solve_p3p1
from recoloureur.recolour.recolour_path import PathBuilder, RecolourPath, relabel_steps
from recoloureur.validator import Validator

logger = logging.getLogger(__name__)

Steps = List[Tuple[int, int]]


# ---------------------------------------------------------
# Tight clique cutsets
# ---------------------------------------------------------

def check_tight(g: Graph, clique: Iterable[int], component: Iterable[int]) -> None:
    """
    Raises NotTight unless `clique` is a clique complete to `component` and
    `component` is a connected component of g - clique.
    """
    q, h = sorted(clique), sorted(component)
    if not g.is_clique(q):
        raise NotTight(f"{q} is not a clique")
    if not g.is_complete_to(q, h):
        raise NotTight(f"{q} is not complete to {h}")
    h_mask = mask_of(h)
    outside = g.all_mask & ~h_mask & ~mask_of(q)
    if any(g.mask(v) & outside for v in h):
        raise NotTight(f"{h} has neighbours outside itself and the clique")
    if h and len(component_masks(g, h_mask)) != 1:
        raise NotTight(f"{h} is not connected")


def _lift_step(builder: PathBuilder, clique: set, component: Sequence[int], v: int, colour: int) -> None:
    """
    Replays one outer step. A clique vertex taking a colour used on the
    component first pushes that colour class of the component onto a colour
    absent from the component and the clique.
    """
    if v in clique:
        on_component = builder.colours_on(component)
        if colour in on_component:
            blocked = on_component | builder.colours_on(clique)
            spare = next((r for r in range(1, builder.palette + 1) if r not in blocked), None)
            if spare is None:
                raise PaletteTooSmall("no colour is absent from the component and the clique")
            for h in component:
                if builder.colours[h] == colour:
                    builder.recolour(h, spare)
    builder.recolour(v, colour)


def lift_over_tight_component(g: Graph, clique: Iterable[int], component: Iterable[int],
                              outer_path: RecolourPath, outer_vertices: Sequence[int],
                              start: Colouring) -> RecolourPath:
    """
    Lifts a recolouring of g - component to g.

    outer_path is indexed by g[outer_vertices] (position i is host vertex
    outer_vertices[i]); start is the full colouring of g it starts from. The
    component must keep at least one colour free of itself and the clique.
    """
    clique, component = sorted(clique), sorted(component)
    check_tight(g, clique, component)
    if sorted(outer_vertices) != sorted(set(g.vertices()) - set(component)):
        raise LengthMismatch("outer vertices must be exactly g minus the component")
    if any(start[outer_vertices[i]] != c for i, c in enumerate(outer_path.start.colours)):
        raise LengthMismatch("outer path does not start from the given colouring")
    builder = PathBuilder(g, start, max(start.palette_size, outer_path.palette))
    clique_set = set(clique)
    with builder.phase("lift"):
        for step in outer_path.steps:
            _lift_step(builder, clique_set, component, outer_vertices[step.vertex], step.new_colour)
    return builder.build()


def _base_steps(g: Graph, palette: int, a: Colouring, b: Colouring, settings: Settings) -> Steps:
    """
    Recolouring on a blow-up of C5 (or any (P3+P1)-free graph): exact BFS
    when the state space fits the budget, the (P3+P1)-free algorithm otherwise.
    """
    if a.colours == b.colours:
        return []
    if state_space_size(g.vertex_count, palette) <= settings.state_budget:
        try:
            found = oracle_path(g, palette, a, b, settings.state_budget)
        except BudgetExceeded:
            found = None
        else:
            if found is None:
                raise InternalInvariantViolation("blow-up of C5 is not mixing")
            return found
    if Validator().is_free(g, "P3+P1"):
        return [(s.vertex, s.new_colour) for s in solve_p3p1(g, palette, a, b).steps]
    raise BlowupBaseTooLarge(f"base graph on {g.vertex_count} vertices is beyond the exact search")


def recolour_tight_component(builder: PathBuilder, clique: Sequence[int], component: Sequence[int],
                             target: Sequence[int], settings: Settings) -> None:
    """
    Recolours the component of a tight clique cutset to `target` (host
    colours, one per component vertex) without touching anything else.

    The component only ever uses colours missing from the clique, so it is
    solved as a standalone graph on those colours.
    """
    allowed = [c for c in range(1, builder.palette + 1) if c not in builder.colours_on(clique)]
    index = {c: i for i, c in enumerate(allowed, start=1)}
    sub, order = builder.g.induced(component)
    current = [builder.colours[v] for v in order]
    try:
        a = Colouring(tuple(index[c] for c in current), len(allowed))
        b = Colouring(tuple(index[c] for c in target), len(allowed))
    except KeyError:
        raise InternalInvariantViolation("component colour clashes with the clique")
    builder.extend(relabel_steps(_base_steps(sub, len(allowed), a, b, settings), order, allowed))


def _optimal_target(g: Graph, component: Sequence[int], allowed: Sequence[int]) -> List[int]:
    sub, _ = g.induced(component)
    target = [0] * sub.vertex_count
    colour = 0
    for part in optimal_anticomponent_colourings(sub):
        for members in part.classes:
            for v in members:
                target[v] = allowed[colour]
            colour += 1
    return target


def split_off_blowup(g: Graph) -> Tuple[List[int], List[int]]:
    """
    For a connected non-chordal (P5,C4)-free graph: a maximal C5 blow-up H
    and the clique Q of vertices complete to it. Every other vertex is
    anticomplete to H, so Q is empty only when g is H itself.
    """
    seed = find_induced_c5(g)
    if seed is None:
        raise InternalInvariantViolation("non-chordal (P5,C4)-free graph has no induced C5")
    blowup, _ = maximal_c5_blowup(g, seed)
    component = sorted(blowup)
    clique = [v for v in g.vertices() if v not in blowup and g.is_complete_to([v], component)]
    if clique:
        check_tight(g, clique, component)
    elif len(component) != g.vertex_count:
        raise InternalInvariantViolation("C5 blow-up is a proper part of a connected graph yet has no clique cutset")
    return component, clique


def blowup_decomposition(g: Graph) -> Tuple[List[Tuple[List[int], List[int]]], List[int]]:
    """
    Peels C5 blow-ups off a connected (P5,C4)-free graph one tight clique
    cutset at a time. Returns the (component, clique) pieces in host
    indices and the vertices of the chordal remainder; the number of
    pieces is the depth the recolouring recursion reaches.
    """
    pieces: List[Tuple[List[int], List[int]]] = []
    host = list(range(g.vertex_count))
    while g.vertex_count and chordal_elimination_order(g) is None:
        component, clique = split_off_blowup(g)
        pieces.append(([host[v] for v in component], [host[v] for v in clique]))
        if not clique:
            return pieces, []
        g, order = g.without(component)
        host = [host[v] for v in order]
    return pieces, host


def p5c4_chromatic_number(g: Graph) -> int:
    """
    chi of a connected (P5,C4)-free graph, read off the same decomposition:
    omega on the chordal remainder, and the anticomponent sum plus |Q| on
    each C5 blow-up cut off by a clique Q.
    """
    pieces, remainder = blowup_decomposition(g)
    best = 0
    for component, clique in pieces:
        sub, _ = g.induced(component)
        best = max(best, sum(part.chi for part in optimal_anticomponent_colourings(sub)) + len(clique))
    if remainder:
        rest, _ = g.induced(remainder)
        best = max(best, chordal_clique_number(rest, chordal_elimination_order(rest)))
    return best


def _solve(g: Graph, palette: int, a: Colouring, b: Colouring, settings: Settings,
           depth: int = 0) -> Tuple[Steps, Dict[str, int]]:
    """
    Recursion over tight clique cutsets. Chordal graphs are solved directly;
    otherwise the blow-up H is normalised, g - H is solved and lifted, and
    H is finally recoloured to its target.
    """
    if g.vertex_count == 0 or a.colours == b.colours:
        return [], {}
    order = chordal_elimination_order(g)
    if order is not None:
        steps = chordal_steps(g, palette, a, b, order)
        return steps, {"chordal": len(steps)}
    component, clique = split_off_blowup(g)
    if not clique:
        logger.debug("depth %d: base blow-up on %d vertices", depth, len(component))
        steps = _base_steps(g, palette, a, b, settings)
        return steps, {"base": len(steps)}
    logger.debug("depth %d: blow-up %s cut off by clique %s", depth, component, clique)

    builder = PathBuilder(g, a, palette)
    with builder.phase("tight_normalise"):
        allowed = [c for c in range(1, palette + 1) if c not in builder.colours_on(clique)]
        if len(builder.colours_on(component)) >= len(allowed):
            recolour_tight_component(builder, clique, component,
                                     _optimal_target(g, component, allowed), settings)

    outer, outer_order = g.without(component)
    if not is_connected(outer):
        raise InternalInvariantViolation("removing a tight component disconnected the graph")
    outer_a = Colouring(tuple(builder.colours[v] for v in outer_order), palette)
    outer_b = Colouring(tuple(b[v] for v in outer_order), palette)
    outer_steps, _ = _solve(outer, palette, outer_a, outer_b, settings, depth + 1)
    clique_set = set(clique)
    with builder.phase("lift"):
        for v, c in outer_steps:
            _lift_step(builder, clique_set, component, outer_order[v], c)

    with builder.phase("tight_finish"):
        recolour_tight_component(builder, clique, component, [b[v] for v in component], settings)
    return [(s.vertex, s.new_colour) for s in builder.steps], dict(builder.phases)


def recolour_p5c4(g: Graph, palette: int, a: Colouring, b: Colouring,
                  settings: Optional[Settings] = None) -> RecolourPath:
    """
    Recolours a into b on a connected (P5,C4)-free graph with
    palette >= chi(g) + 1.
    """
    settings = settings or Settings()
    if len(a) != g.vertex_count or len(b) != g.vertex_count:
        raise LengthMismatch("colourings and graph differ in size")
    Validator().require_free(g, ["P5", "C4"], "(P5,C4)-free")
    if not is_connected(g):
        first = sorted(iter_bits(component_masks(g)[0]))
        raise Disconnected(f"graph is disconnected; component {first} is separate", None, first)
    if not is_proper(g, a) or not is_proper(g, b):
        raise ImproperColouring("both endpoints must be proper")
    chi = p5c4_chromatic_number(g)
    if palette < chi + 1 or any(c > palette for c in a.colours + b.colours):
        raise PaletteTooSmall(f"palette {palette} is below chi + 1 = {chi + 1}")
    steps, phases = _solve(g, palette, a, b, settings)
    builder = PathBuilder(g, a, palette)
    builder.extend(steps)
    path = RecolourPath(builder.start, tuple(builder.steps), phases)
    logger.info("(P5,C4)-free recolouring on %d vertices: %d steps", g.vertex_count, len(path))
    return path


class RecolourP5C4:
    """
    Tight-clique-cutset recursion for connected (P5,C4)-free graphs.
    """
    algorithm_name = "p5c4"
    graph_class = "connected (P5,C4)-free"

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or Settings()

    def accepts(self, g: Graph) -> Tuple[str, str, bool]:
        validator = Validator()
        ok = validator.is_free(g, "P5") and validator.is_free(g, "C4") and is_connected(g)
        return self.graph_class, self.algorithm_name, ok

    def recolour(self, g: Graph, palette: int, a: Colouring, b: Colouring) -> RecolourPath:
        return recolour_p5c4(g, palette, a, b, self.settings)
