import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from recoloureur.colouring.colouring_base import Colouring, is_proper, same_partition
from recoloureur.colouring.colouring_chromatic import chi_3k1_free, chi_p3_free
from recoloureur.errors import (
    ImproperColouring,
    InternalInvariantViolation,
    LengthMismatch,
    PaletteTooSmall,
)
from recoloureur.graph.graph_base import Graph, anticomponents, components
from recoloureur.recolour.recolour_3k1 import match_classes_3k1
from recoloureur.recolour.recolour_path import PathBuilder, RecolourPath, concat_paths, reverse_path
from recoloureur.recolour.recolour_renaming import rename_classes, renaming_path
from recoloureur.validator import Validator

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AnticomponentColouring:
    """
    One anticomponent of a (P3+P1)-free graph with an optimal colouring of it.

    kind is "p3" (disjoint union of cliques, `cliques` filled) or "3k1"
    (classes of at most two vertices). Vertex indices are host indices.
    """
    vertices: Tuple[int, ...]
    kind: str
    chi: int
    classes: Tuple[Tuple[int, ...], ...]
    cliques: Tuple[Tuple[int, ...], ...] = ()


def optimal_anticomponent_colourings(g: Graph) -> List[AnticomponentColouring]:
    """
    Splits g into anticomponents and colours each one optimally.

    Every anticomponent of a (P3+P1)-free graph is P3-free or 3K1-free, and
    colours never repeat across anticomponents, so chi(g) is the sum of the
    parts' chromatic numbers.
    """
    validator = Validator()
    result: List[AnticomponentColouring] = []
    for block in anticomponents(g):
        members = sorted(block)
        sub, order = g.induced(members)
        if validator.is_free(sub, "P3"):
            chi, colouring = chi_p3_free(sub)
            kind = "p3"
            cliques = tuple(tuple(order[v] for v in sorted(part)) for part in components(sub))
        elif validator.is_free(sub, "3K1"):
            chi, colouring = chi_3k1_free(sub)
            kind = "3k1"
            cliques = ()
        else:
            raise InternalInvariantViolation(f"anticomponent {members} is neither P3-free nor 3K1-free")
        classes = [[] for _ in range(chi)]
        for v in range(sub.vertex_count):
            classes[colouring[v] - 1].append(order[v])
        result.append(AnticomponentColouring(
            tuple(members), kind, chi, tuple(tuple(c) for c in classes), cliques))
    return result


def p3p1_chromatic_number(g: Graph) -> int:
    return sum(part.chi for part in optimal_anticomponent_colourings(g))


# ---------------------------------------------------------
# Normalisation
# ---------------------------------------------------------

def _normalise_anticomponent(builder: PathBuilder, part: AnticomponentColouring,
                             allowed: Sequence[int]) -> None:
    if part.kind == "3k1":
        match_classes_3k1(builder, part.classes, allowed)
        return
    targets = list(allowed[:part.chi])
    for clique in part.cliques:
        rename_classes(builder, [[v] for v in clique], targets[:len(clique)], allowed)


def normalise_p3p1(builder: PathBuilder, parts: List[AnticomponentColouring]) -> None:
    """
    Walks the builder's colouring to one whose restriction to every
    anticomponent has the classes of that anticomponent's optimal colouring.

    A free colour anywhere in the palette lets the lowest pending part go
    next; otherwise the pending part using at least chi+1 colours does.
    Each part is then recoloured inside the colours no other part uses.
    """
    palette = builder.palette
    pending = list(range(len(parts)))
    while pending:
        used = builder.colours_on(range(builder.g.vertex_count))
        if len(used) < palette:
            index = pending[0]
        else:
            wide = [i for i in pending if len(builder.colours_on(parts[i].vertices)) >= parts[i].chi + 1]
            if not wide:
                raise InternalInvariantViolation("every pending anticomponent is coloured tightly")
            index = wide[0]
        part = parts[index]
        inside = set(part.vertices)
        elsewhere = builder.colours_on(v for v in range(builder.g.vertex_count) if v not in inside)
        allowed = [c for c in range(1, palette + 1) if c not in elsewhere]
        logger.debug("normalising anticomponent %s (%s, chi=%d) inside %s",
                     list(part.vertices), part.kind, part.chi, allowed)
        _normalise_anticomponent(builder, part, allowed)
        pending.remove(index)


def recolour_p3p1(g: Graph, palette: int, a: Colouring, b: Colouring) -> RecolourPath:
    """
    Recolours a into b on a (P3+P1)-free graph with palette >= chi(g) + 1.

    Both ends are normalised to colourings sharing one class partition, the
    normalised ends are joined by renaming, and the b side is reversed.
    Every vertex is recoloured at most 6 times.
    """
    if len(a) != g.vertex_count or len(b) != g.vertex_count:
        raise LengthMismatch("colourings and graph differ in size")
    Validator().require_free(g, ["P3+P1"], "(P3+P1)-free")
    if not is_proper(g, a) or not is_proper(g, b):
        raise ImproperColouring("both endpoints must be proper")
    parts = optimal_anticomponent_colourings(g)
    chi = sum(part.chi for part in parts)
    if palette < chi + 1 or any(c > palette for c in a.colours + b.colours):
        raise PaletteTooSmall(f"palette {palette} is below chi + 1 = {chi + 1}")
    return solve_p3p1(g, palette, a, b, parts)


def solve_p3p1(g: Graph, palette: int, a: Colouring, b: Colouring,
               parts: List[AnticomponentColouring] = None) -> RecolourPath:
    """
    Unchecked core of recolour_p3p1, reused by the blow-up base case.
    """
    if parts is None:
        parts = optimal_anticomponent_colourings(g)
    ends = []
    for name, endpoint in (("normalise_start", a), ("normalise_target", b)):
        builder = PathBuilder(g, endpoint, palette)
        with builder.phase(name):
            normalise_p3p1(builder, parts)
        ends.append(builder.build())
    start_side, target_side = ends
    if not same_partition(start_side.final(), target_side.final()):
        raise InternalInvariantViolation("normalised colourings have different classes")
    middle = renaming_path(g, palette, start_side.final(), target_side.final())
    back = reverse_path(target_side)
    path = concat_paths(start_side, middle, back)
    logger.info("(P3+P1)-free recolouring on %d vertices: %d steps, at most %d per vertex",
                g.vertex_count, len(path), path.max_per_vertex())
    return path


class RecolourP3P1:
    algorithm_name = "p3p1"
    graph_class = "(P3+P1)-free"

    def accepts(self, g: Graph) -> Tuple[str, str, bool]:
        return self.graph_class, self.algorithm_name, Validator().is_free(g, "P3+P1")

    def recolour(self, g: Graph, palette: int, a: Colouring, b: Colouring) -> RecolourPath:
        return recolour_p3p1(g, palette, a, b)
