import logging
from typing import Dict, List, Sequence

from recoloureur.colouring.colouring_base import ColourClasses, Colouring, is_proper
from recoloureur.errors import (
    BadTarget,
    ImproperColouring,
    InternalInvariantViolation,
    LengthMismatch,
    Not3K1Free,
    PaletteTooSmall,
)
from recoloureur.graph.graph_base import Graph
from recoloureur.recolour.recolour_path import PathBuilder, RecolourPath
from recoloureur.validator import Validator

logger = logging.getLogger(__name__)


def match_classes_3k1(builder: PathBuilder, classes: Sequence[Sequence[int]],
                      allowed: Sequence[int]) -> None:
    """
    Recolours the vertices of `classes` (independent sets of at most two
    vertices) so that each class becomes monochromatic, every vertex being
    recoloured at most once.

    Each round reserves one colour c for one unprocessed class:
      (o) a class already monochromatic in c, with c on no other
          unprocessed vertex, keeps c;
      (i) c is on no unprocessed vertex: the lowest class takes c;
      (ii) otherwise c is on exactly one unprocessed vertex v: v's class
           takes c, v stays put.
    With |allowed| >= |classes| + 1 a counting argument guarantees one of
    the rounds always applies.
    """
    pending: List[List[int]] = [sorted(c) for c in sorted(classes, key=min)]
    reserved = set()
    while pending:
        available = [c for c in allowed if c not in reserved]
        counts: Dict[int, List[int]] = {c: [] for c in available}
        for members in pending:
            for v in members:
                colour = builder.colours[v]
                if colour in counts:
                    counts[colour].append(v)
        settled = [members for members in pending
                   if len(counts.get(builder.colours[members[0]], ())) == len(members)
                   and all(builder.colours[v] == builder.colours[members[0]] for v in members)]
        unused = [c for c in available if not counts[c]]
        if settled:
            chosen = settled[0]
            colour = builder.colours[chosen[0]]
        elif unused:
            colour, chosen = unused[0], pending[0]
        else:
            single = [c for c in available if len(counts[c]) == 1]
            if not single:
                raise InternalInvariantViolation("no colour is unused or used once on the pending classes")
            colour = single[0]
            holder = counts[colour][0]
            chosen = next(members for members in pending if holder in members)
        for v in chosen:
            builder.recolour(v, colour)
        reserved.add(colour)
        pending.remove(chosen)


def recolour_3k1(g: Graph, palette: int, a: Colouring, target: ColourClasses) -> RecolourPath:
    """
    Recolours a into a colouring whose classes are the target classes,
    recolouring every vertex at most once.
    """
    if len(a) != g.vertex_count:
        raise LengthMismatch("colouring and graph differ in size")
    Validator().require_free(g, ["3K1"], "3K1-free", Not3K1Free)
    classes = [frozenset(c) for c in (target.values() if isinstance(target, dict) else target)]
    covered = [v for c in classes for v in c]
    if sorted(covered) != list(range(g.vertex_count)) or any(not c for c in classes):
        raise BadTarget("target classes must partition the vertex set")
    if any(not g.is_independent(c) for c in classes):
        raise BadTarget("target classes must be independent sets")
    if not is_proper(g, a):
        raise ImproperColouring("start colouring is not proper")
    if palette < len(classes) + 1 or any(c > palette for c in a.colours):
        raise PaletteTooSmall(f"palette {palette} is too small for {len(classes)} target classes")
    builder = PathBuilder(g, a, palette)
    with builder.phase("match_classes"):
        match_classes_3k1(builder, classes, range(1, palette + 1))
    return builder.build()
