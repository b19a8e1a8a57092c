import logging
from typing import List, Sequence, Tuple

from recoloureur.colouring.colouring_base import Colouring, colour_classes, is_proper, same_partition
from recoloureur.errors import (
    ImproperColouring,
    InternalInvariantViolation,
    LengthMismatch,
    PaletteTooSmall,
    PartitionMismatch,
)
from recoloureur.graph.graph_base import Graph
from recoloureur.recolour.recolour_path import PathBuilder, RecolourPath

logger = logging.getLogger(__name__)


def rename_classes(builder: PathBuilder, classes: Sequence[Sequence[int]],
                   targets: Sequence[int], allowed: Sequence[int]) -> None:
    """
    Moves each monochromatic class to its target colour, recolouring every
    vertex at most twice.

    A class moves straight to its target once no class holds that colour.
    When every pending target is held (the pending classes form cycles), the
    lowest pending class parks on a colour from `allowed` that no class
    holds, which unblocks its cycle.
    """
    current: List[int] = []
    for members in classes:
        seen = builder.colours_on(members)
        if len(seen) != 1:
            raise InternalInvariantViolation(f"class {sorted(members)} is not monochromatic")
        current.append(seen.pop())
    pending = {i for i in range(len(classes)) if current[i] != targets[i]}

    def move(i: int, colour: int) -> None:
        for v in sorted(classes[i]):
            builder.recolour(v, colour)
        current[i] = colour

    while pending:
        held = set(current)
        movable = [i for i in sorted(pending) if targets[i] not in held]
        if movable:
            i = movable[0]
            move(i, targets[i])
            pending.discard(i)
            continue
        spare = [c for c in allowed if c not in held]
        if not spare:
            raise PaletteTooSmall("renaming needs a colour unused by every class")
        move(min(pending), spare[0])


def renaming_path(g: Graph, palette: int, a: Colouring, b: Colouring) -> RecolourPath:
    """
    Recolours a into b when both induce the same colour classes, touching
    every vertex at most twice. Needs a spare colour: k classes with k < palette.
    """
    if len(a) != g.vertex_count or len(b) != g.vertex_count:
        raise LengthMismatch("colourings and graph differ in size")
    if any(c > palette for c in a.colours + b.colours):
        raise PaletteTooSmall(f"colourings use colours above {palette}")
    if not is_proper(g, a) or not is_proper(g, b):
        raise ImproperColouring("renaming needs proper endpoints")
    if not same_partition(a, b):
        raise PartitionMismatch("colourings induce different colour classes")
    builder = PathBuilder(g, a, palette)
    if a.colours == b.colours:
        return builder.build()
    classes = list(colour_classes(a).values())
    if len(classes) >= palette:
        raise PaletteTooSmall(f"{len(classes)} classes leave no spare colour in palette {palette}")
    targets = [b[min(members)] for members in classes]
    with builder.phase("rename"):
        rename_classes(builder, classes, targets, range(1, palette + 1))
    return builder.build()


class RecolourRenaming:
    """
    Renaming between two colourings with the same colour classes, on any graph.
    """
    algorithm_name = "renaming"
    graph_class = "any"

    def accepts(self, g: Graph) -> Tuple[str, str, bool]:
        return self.graph_class, self.algorithm_name, True

    def recolour(self, g: Graph, palette: int, a: Colouring, b: Colouring) -> RecolourPath:
        return renaming_path(g, palette, a, b)
