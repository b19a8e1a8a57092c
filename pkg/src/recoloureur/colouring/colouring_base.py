from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Sequence, Set, Tuple

from recoloureur.errors import BadParams, ImproperColouring, LengthMismatch
from recoloureur.graph.graph_base import Graph, VertexSet, iter_bits

ColourClasses = Dict[int, VertexSet]


@dataclass(frozen=True)
class Colouring:
    """
    Assignment of colours 1..palette_size to vertices 0..n-1.

    Properness is a property of a (graph, colouring) pair and is checked with
    `is_proper`, never assumed.
    """
    colours: Tuple[int, ...]
    palette_size: int

    def __post_init__(self):
        object.__setattr__(self, "colours", tuple(int(c) for c in self.colours))
        if self.palette_size < 1:
            raise BadParams("palette_size must be positive")
        for v, c in enumerate(self.colours):
            if not 1 <= c <= self.palette_size:
                raise BadParams(f"colour {c} of vertex {v} outside 1..{self.palette_size}")

    @classmethod
    def of(cls, colours: Sequence[int], palette_size: int = 0) -> "Colouring":
        """
        Builds a colouring; palette_size defaults to the largest colour used.
        """
        colours = tuple(colours)
        return cls(colours, palette_size or max(colours, default=1))

    def __len__(self) -> int:
        return len(self.colours)

    def __getitem__(self, v: int) -> int:
        return self.colours[v]

    def __iter__(self):
        return iter(self.colours)

    def recoloured(self, v: int, colour: int) -> "Colouring":
        updated = list(self.colours)
        updated[v] = colour
        return Colouring(tuple(updated), self.palette_size)

    def with_palette(self, palette_size: int) -> "Colouring":
        return Colouring(self.colours, palette_size)

    def used_colours(self, vertices: Iterable[int] = None) -> Set[int]:
        if vertices is None:
            return set(self.colours)
        return {self.colours[v] for v in vertices}

    def restricted(self, vertices: Sequence[int]) -> "Colouring":
        """
        Colouring of an induced subgraph whose vertex i is host vertex vertices[i].
        """
        return Colouring(tuple(self.colours[v] for v in vertices), self.palette_size)


def _check_length(g: Graph, c: Colouring) -> None:
    if len(c) != g.vertex_count:
        raise LengthMismatch(f"colouring has {len(c)} entries, graph has {g.vertex_count} vertices")


def monochromatic_edge(g: Graph, c: Sequence[int]):
    for u, v in g.edges():
        if c[u] == c[v]:
            return u, v
    return None


def is_proper(g: Graph, c: Colouring) -> bool:
    _check_length(g, c)
    return monochromatic_edge(g, c.colours) is None


def colour_classes(c: Colouring) -> ColourClasses:
    buckets: Dict[int, List[int]] = {}
    for v, colour in enumerate(c.colours):
        buckets.setdefault(colour, []).append(v)
    return {colour: frozenset(vs) for colour, vs in sorted(buckets.items())}


def class_partition(c: Colouring) -> FrozenSet[VertexSet]:
    return frozenset(colour_classes(c).values())


def same_partition(a: Colouring, b: Colouring) -> bool:
    """
    True iff a and b induce the same colour classes, ignoring colour labels.
    """
    if len(a) != len(b):
        raise LengthMismatch("colourings have different lengths")
    return class_partition(a) == class_partition(b)


def free_colours(g: Graph, c: Sequence[int], v: int, palette: Iterable[int]) -> List[int]:
    """
    Palette colours absent from the closed neighbourhood of v.
    """
    seen = {c[u] for u in iter_bits(g.mask(v))}
    seen.add(c[v])
    return [d for d in palette if d not in seen]


def is_frozen(g: Graph, c: Colouring) -> bool:
    """
    True iff every closed neighbourhood sees all palette colours, i.e. the
    colouring is an isolated vertex of the reconfiguration graph.
    """
    if not is_proper(g, c):
        raise ImproperColouring("is_frozen needs a proper colouring")
    full = set(range(1, c.palette_size + 1))
    for v in g.vertices():
        seen = {c[u] for u in iter_bits(g.closed_mask(v))}
        if seen != full:
            return False
    return True
