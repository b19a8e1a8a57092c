import logging
from typing import List, Sequence, Tuple

from recoloureur.colouring.colouring_base import Colouring, is_proper, same_partition
from recoloureur.errors import (
    ImproperColouring,
    InternalInvariantViolation,
    LengthMismatch,
    PaletteTooSmall,
)
from recoloureur.graph.graph_chordal import split_partition
from recoloureur.graph.graph_base import Graph
from recoloureur.graph.graph_induced import find_induced_c5
from recoloureur.recolour.recolour_path import PathBuilder, RecolourPath, concat_paths, reverse_path
from recoloureur.recolour.recolour_renaming import renaming_path
from recoloureur.validator import Validator

logger = logging.getLogger(__name__)


def _labellings(seed: Sequence[int]) -> List[Tuple[int, ...]]:
    """
    The ten ways to walk round the cycle: five starting points, two directions.
    """
    result = []
    for start in range(5):
        for direction in (1, -1):
            result.append(tuple(seed[(start + direction * j) % 5] for j in range(5)))
    return result


def _spread_c5(builder: PathBuilder, cycle: Sequence[int], clique: Sequence[int]) -> None:
    """
    A C5 coloured with 3 colours gets a 4th: the lowest repeating vertex moves
    to the lowest colour absent from the cycle and the clique.
    """
    colours = [builder.colours[v] for v in cycle]
    if len(set(colours)) != 3:
        return
    repeating = sorted(v for v in cycle if colours.count(builder.colours[v]) > 1)
    absent = builder.colours_on(list(cycle) + list(clique))
    spare = [c for c in range(1, builder.palette + 1) if c not in absent]
    if not spare:
        raise PaletteTooSmall("no colour is free on the C5 and its clique")
    builder.recolour(repeating[0], spare[0])


def _rainbow(builder: PathBuilder, vertices: Sequence[int]) -> bool:
    return len(builder.colours_on(vertices)) == len(vertices)


def _collapse_c5(builder: PathBuilder, labelled: Sequence[int], rest: Sequence[int]) -> None:
    v1, v2, _, v4, v5 = labelled
    c1, c2 = builder.colours[v1], builder.colours[v2]
    for v in sorted(rest):
        builder.recolour(v, c1)
    builder.recolour(v4, c1)
    builder.recolour(v5, c2)


def _collapse_split(builder: PathBuilder, clique: Sequence[int], rest: Sequence[int]) -> None:
    """
    Gives each v in I the colour of u_j, the first clique vertex it misses.
    """
    for v in sorted(rest):
        missed = next((u for u in clique if not builder.g.has_edge(u, v)), None)
        if missed is None:
            raise InternalInvariantViolation(f"vertex {v} is complete to the maximum clique")
        builder.recolour(v, builder.colours[missed])


def recolour_2k2c4(g: Graph, palette: int, a: Colouring, b: Colouring) -> RecolourPath:
    """
    Recolours a into b on a (2K2,C4)-free graph with palette >= chi(g) + 1,
    recolouring every vertex at most 4 times.

    With an induced C5, V splits into the C5, a clique Q complete to it and
    an independent set I anticomplete to it; otherwise g is split. Both
    ends are collapsed onto the same optimal partition, then renamed.
    """
    if len(a) != g.vertex_count or len(b) != g.vertex_count:
        raise LengthMismatch("colourings and graph differ in size")
    Validator().require_free(g, ["2K2", "C4"], "(2K2,C4)-free")
    if not is_proper(g, a) or not is_proper(g, b):
        raise ImproperColouring("both endpoints must be proper")
    if any(c > palette for c in a.colours + b.colours):
        raise PaletteTooSmall(f"colourings use colours above {palette}")

    starts = [PathBuilder(g, a, palette), PathBuilder(g, b, palette)]
    names = ("normalise_start", "normalise_target")
    seed = find_induced_c5(g)
    if seed is not None:
        cycle = set(seed)
        clique = [v for v in g.vertices() if v not in cycle and g.is_complete_to([v], cycle)]
        rest = [v for v in g.vertices() if v not in cycle and v not in clique]
        if not (g.is_clique(clique) and g.is_independent(rest) and g.is_anticomplete_to(rest, cycle)):
            raise InternalInvariantViolation("C5 decomposition of a (2K2,C4)-free graph failed")
        chi = 3 + len(clique)
        if palette < chi + 1:
            raise PaletteTooSmall(f"palette {palette} is below chi + 1 = {chi + 1}")
        for builder, name in zip(starts, names):
            with builder.phase(name):
                _spread_c5(builder, seed, clique)
        labelled = next((lab for lab in _labellings(seed)
                         if all(_rainbow(builder, lab[:3]) for builder in starts)), None)
        if labelled is None:
            raise InternalInvariantViolation("no labelling of the C5 is rainbow on both ends")
        logger.debug("C5 case: cycle %s, clique %s, rest %s", labelled, clique, rest)
        for builder, name in zip(starts, names):
            with builder.phase(name):
                _collapse_c5(builder, labelled, rest)
    else:
        split = split_partition(g)
        if split is None:
            raise InternalInvariantViolation("(2K2,C4,C5)-free graph is not split")
        clique, rest = sorted(split[0]), sorted(split[1])
        chi = len(clique)
        if palette < chi + 1:
            raise PaletteTooSmall(f"palette {palette} is below chi + 1 = {chi + 1}")
        logger.debug("split case: clique %s, rest %s", clique, rest)
        for builder, name in zip(starts, names):
            with builder.phase(name):
                _collapse_split(builder, clique, rest)

    start_side, target_side = (builder.build() for builder in starts)
    if not same_partition(start_side.final(), target_side.final()):
        raise InternalInvariantViolation("collapsed colourings have different classes")
    middle = renaming_path(g, palette, start_side.final(), target_side.final())
    return concat_paths(start_side, middle, reverse_path(target_side))


class Recolour2K2C4:
    algorithm_name = "two_k2_c4"
    graph_class = "(2K2,C4)-free"

    def accepts(self, g: Graph) -> Tuple[str, str, bool]:
        validator = Validator()
        return self.graph_class, self.algorithm_name, validator.is_free(g, "2K2") and validator.is_free(g, "C4")

    def recolour(self, g: Graph, palette: int, a: Colouring, b: Colouring) -> RecolourPath:
        return recolour_2k2c4(g, palette, a, b)
