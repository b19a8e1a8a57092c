from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from recoloureur.colouring.colouring_base import Colouring
from recoloureur.errors import InternalInvariantViolation, LengthMismatch, MalformedInput
from recoloureur.graph.graph_base import Graph, iter_bits
from recoloureur.graph.graph_io import PathLike, content_lines, write_text_atomic


@dataclass(frozen=True)
class RecolourStep:
    vertex: int
    new_colour: int


@dataclass(frozen=True)
class RecolourPath:
    """
    A walk in R_l(G): a start colouring plus single-vertex recolour steps.

    `phases` records how many steps each named phase of an algorithm
    contributed; it is bookkeeping and takes no part in equality.
    """
    start: Colouring
    steps: Tuple[RecolourStep, ...] = ()
    phases: Dict[str, int] = field(default_factory=dict, compare=False)

    @property
    def palette(self) -> int:
        return self.start.palette_size

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def per_vertex_counts(self) -> Dict[int, int]:
        counts: Dict[int, int] = {}
        for step in self.steps:
            counts[step.vertex] = counts.get(step.vertex, 0) + 1
        return counts

    def max_per_vertex(self) -> int:
        return max(self.per_vertex_counts.values(), default=0)

    def colourings(self) -> Iterable[Colouring]:
        """
        Replays the walk without validating it, yielding every colouring.
        """
        current = list(self.start.colours)
        yield self.start
        for step in self.steps:
            current[step.vertex] = step.new_colour
            yield Colouring(tuple(current), self.palette)

    def final(self) -> Colouring:
        current = list(self.start.colours)
        for step in self.steps:
            current[step.vertex] = step.new_colour
        return Colouring(tuple(current), self.palette)


class Validation(NamedTuple):
    final: Colouring
    ok: bool
    failing_step: Optional[int]


def apply_and_validate(g: Graph, p: RecolourPath) -> Validation:
    """
    Replays p on g and reports the first violation instead of raising.

    A step violates when it leaves the palette, keeps the vertex's colour or
    creates a monochromatic edge. An improper start gives ok=False with
    failing_step None. `final` is the last colouring reached before a
    violation.
    """
    if len(p.start) != g.vertex_count:
        raise LengthMismatch(f"start has {len(p.start)} entries, graph has {g.vertex_count} vertices")
    current = list(p.start.colours)
    for u, v in g.edges():
        if current[u] == current[v]:
            return Validation(p.start, False, None)
    for index, step in enumerate(p.steps):
        v, d = step.vertex, step.new_colour
        bad = (
            not 0 <= v < g.vertex_count
            or not 1 <= d <= p.palette
            or current[v] == d
            or any(current[u] == d for u in iter_bits(g.mask(v)))
        )
        if bad:
            return Validation(Colouring(tuple(current), p.palette), False, index)
        current[v] = d
    return Validation(Colouring(tuple(current), p.palette), True, None)


def reverse_path(p: RecolourPath) -> RecolourPath:
    """
    The same walk travelled backwards, from p.final() to p.start.
    """
    current = list(p.start.colours)
    undo = []
    for step in p.steps:
        undo.append(RecolourStep(step.vertex, current[step.vertex]))
        current[step.vertex] = step.new_colour
    return RecolourPath(Colouring(tuple(current), p.palette), tuple(reversed(undo)), dict(p.phases))


def concat_paths(first: RecolourPath, *rest: RecolourPath) -> RecolourPath:
    steps = list(first.steps)
    phases = dict(first.phases)
    end = first.final()
    for p in rest:
        if p.start.colours != end.colours:
            raise InternalInvariantViolation("concatenated paths do not meet")
        steps.extend(p.steps)
        for name, count in p.phases.items():
            phases[name] = phases.get(name, 0) + count
        end = p.final()
    return RecolourPath(first.start, tuple(steps), phases)


class PathBuilder:
    """
    Records recolour steps on a live colouring of g.

    Every step is checked against the current neighbourhood; a clash is an
    algorithm bug and raises InternalInvariantViolation. Recolouring a vertex
    to the colour it already has is skipped.
    """

    def __init__(self, g: Graph, start: Colouring, palette: Optional[int] = None):
        self.g = g
        self.palette = palette or start.palette_size
        self.start = Colouring(start.colours, self.palette)
        self.colours: List[int] = list(start.colours)
        self.steps: List[RecolourStep] = []
        self.phases: Dict[str, int] = {}
        self._phase: Optional[str] = None

    def recolour(self, v: int, colour: int) -> None:
        if self.colours[v] == colour:
            return
        if not 1 <= colour <= self.palette:
            raise InternalInvariantViolation(f"colour {colour} outside palette {self.palette}")
        for u in iter_bits(self.g.mask(v)):
            if self.colours[u] == colour:
                raise InternalInvariantViolation(
                    f"recolouring {v} to {colour} clashes with neighbour {u}")
        self.colours[v] = colour
        self.steps.append(RecolourStep(v, colour))
        if self._phase is not None:
            self.phases[self._phase] = self.phases.get(self._phase, 0) + 1

    def extend(self, steps: Iterable[Tuple[int, int]]) -> None:
        for v, colour in steps:
            self.recolour(v, colour)

    @contextmanager
    def phase(self, name: str):
        previous, self._phase = self._phase, name
        self.phases.setdefault(name, 0)
        try:
            yield self
        finally:
            self._phase = previous

    def current(self) -> Colouring:
        return Colouring(tuple(self.colours), self.palette)

    def colours_on(self, vertices: Iterable[int]) -> set:
        return {self.colours[v] for v in vertices}

    def build(self) -> RecolourPath:
        return RecolourPath(self.start, tuple(self.steps), dict(self.phases))


# ---------------------------------------------------------
# Path text format
# ---------------------------------------------------------

def format_path(p: RecolourPath) -> str:
    lines = [f"palette {p.palette}", " ".join(str(c) for c in p.start.colours)]
    lines.extend(f"{s.vertex} {s.new_colour}" for s in p.steps)
    return "\n".join(lines) + "\n"


def parse_path(text: str) -> RecolourPath:
    """
    Reads `palette l`, the start colouring, then one `vertex new_colour` line per step.
    """
    rows = list(content_lines(text))
    if len(rows) < 2 or rows[0][0] != "palette" or len(rows[0]) != 2:
        raise MalformedInput("path file must start with 'palette l' and a start colouring")
    try:
        palette = int(rows[0][1])
        start = [int(t) for t in rows[1]]
        steps = []
        for i, row in enumerate(rows[2:], start=1):
            if len(row) != 2:
                raise MalformedInput(f"step line {i} must be 'vertex new_colour'")
            steps.append(RecolourStep(int(row[0]), int(row[1])))
    except ValueError:
        raise MalformedInput("path file holds non-integer tokens")
    if any(not 1 <= c <= palette for c in start):
        raise MalformedInput(f"start colouring leaves palette 1..{palette}")
    return RecolourPath(Colouring(tuple(start), palette), tuple(steps))


def read_path(path: PathLike) -> RecolourPath:
    return parse_path(Path(path).read_text(encoding="utf-8"))


def write_path(path: PathLike, p: RecolourPath) -> None:
    write_text_atomic(path, format_path(p))


def relabel_steps(steps: Sequence[Tuple[int, int]], vertex_map: Sequence[int],
                  colour_map: Sequence[int]) -> List[Tuple[int, int]]:
    """
    Maps (vertex, colour) steps of a subgraph solved on colours 1..k back to
    host vertices (vertex_map[i]) and host colours (colour_map[c - 1]).
    """
    return [(vertex_map[v], colour_map[c - 1]) for v, c in steps]
