import logging
from collections import deque
from dataclasses import dataclass
from typing import Any, Dict, Iterator, List, Optional, Tuple

import numpy as np

from recoloureur.colouring.colouring_base import Colouring, is_proper
from recoloureur.config import DEFAULT_DIAMETER_LIMIT, DEFAULT_STATE_BUDGET
from recoloureur.errors import BadParams, ImproperColouring, LengthMismatch
from recoloureur.graph.graph_base import Graph
from recoloureur.oracle.oracle_states import check_budget, decode, encode, proper_keys

logger = logging.getLogger(__name__)

INFINITE = "infinite"


@dataclass(frozen=True)
class MixingReport:
    """
    Exhaustive description of R_l(G).

    `diameter` is an int, the string "infinite" when R_l(G) is disconnected,
    or a lower bound (`diameter_is_lower_bound`) when the state count is above
    the exact-diameter limit.
    """
    graph_size: int
    palette: int
    proper_count: int
    is_connected: bool
    diameter: Any
    frozen_count: int
    component_sizes: Tuple[int, ...]
    states_explored: int
    diameter_is_lower_bound: bool = False

    def to_dict(self) -> Dict[str, Any]:
        if self.diameter_is_lower_bound:
            diameter: Any = {"lower_bound": self.diameter}
        else:
            diameter = self.diameter
        return {
            "graph_size": self.graph_size,
            "palette": self.palette,
            "proper_count": self.proper_count,
            "is_connected": self.is_connected,
            "diameter": diameter,
            "frozen_count": self.frozen_count,
            "component_sizes": list(self.component_sizes),
            "states_explored": self.states_explored,
        }


class ReconfigurationSpace:
    """
    Implicit R_l(G): proper colourings are StateKeys marked in a dense numpy
    bit set; edges are generated on demand, vertex ascending then new colour
    ascending.
    """

    def __init__(self, g: Graph, palette: int, budget: int = DEFAULT_STATE_BUDGET):
        self.g = g
        self.palette = palette
        self.n = g.vertex_count
        self.size = check_budget(self.n, palette, budget)
        self.powers = [palette ** i for i in range(self.n)]
        self.neigh = [list(g.neighbours(v)) for v in range(self.n)]
        self.proper = np.zeros(self.size, dtype=bool)
        keys = np.fromiter(proper_keys(g, palette), dtype=np.int64)
        self.proper[keys] = True
        self.proper_list = keys
        self.explored = 0
        logger.debug("R_%d of %r: %d proper colourings in %d keys", palette, g, len(keys), self.size)

    @property
    def proper_count(self) -> int:
        return int(len(self.proper_list))

    def key_of(self, c: Colouring) -> int:
        if len(c) != self.n:
            raise LengthMismatch(f"colouring has {len(c)} entries, graph has {self.n} vertices")
        if any(x > self.palette for x in c.colours):
            raise BadParams(f"colouring uses colours above palette {self.palette}")
        if not is_proper(self.g, c):
            raise ImproperColouring("oracle endpoints must be proper")
        return encode(c.colours, self.palette)

    def neighbours(self, key: int) -> Iterator[Tuple[int, int, int]]:
        """
        Yields (neighbour key, vertex, new colour).
        """
        colours = decode(key, self.n, self.palette)
        for v in range(self.n):
            blocked = {colours[u] for u in self.neigh[v]}
            current = colours[v]
            for d in range(1, self.palette + 1):
                if d == current or d in blocked:
                    continue
                yield key + (d - current) * self.powers[v], v, d

    def bfs(self, source: int, target: Optional[int] = None) -> Dict[int, int]:
        """
        Distances from `source`; stops early once `target` is reached.
        """
        seen = np.zeros(self.size, dtype=bool)
        seen[source] = True
        dist = {source: 0}
        queue = deque([source])
        while queue:
            key = queue.popleft()
            self.explored += 1
            if key == target:
                break
            for nxt, _, _ in self.neighbours(key):
                if not seen[nxt]:
                    seen[nxt] = True
                    dist[nxt] = dist[key] + 1
                    queue.append(nxt)
        return dist

    def shortest_path(self, source: int, target: int) -> Optional[List[Tuple[int, int]]]:
        """
        Steps (vertex, new colour) of a shortest source-target walk, or None.
        """
        seen = np.zeros(self.size, dtype=bool)
        seen[source] = True
        parent: Dict[int, Tuple[int, int, int]] = {source: (-1, -1, -1)}
        queue = deque([source])
        while queue and not seen[target]:
            key = queue.popleft()
            self.explored += 1
            for nxt, v, d in self.neighbours(key):
                if not seen[nxt]:
                    seen[nxt] = True
                    parent[nxt] = (key, v, d)
                    queue.append(nxt)
        if not seen[target]:
            return None
        steps = []
        key = target
        while key != source:
            prev, v, d = parent[key]
            steps.append((v, d))
            key = prev
        steps.reverse()
        return steps

    def components(self) -> List[List[int]]:
        """
        Components as key lists, ordered by smallest key.
        """
        seen = np.zeros(self.size, dtype=bool)
        found = []
        for key in self.proper_list:
            key = int(key)
            if seen[key]:
                continue
            members = list(self.bfs(key).keys())
            seen[members] = True
            found.append(members)
        return found

    def is_isolated(self, key: int) -> bool:
        return next(self.neighbours(key), None) is None


def _diameter(space: ReconfigurationSpace, component: List[int], limit: int) -> Tuple[int, bool]:
    if len(component) <= limit:
        best = 0
        for key in component:
            best = max(best, max(space.bfs(key).values()))
        return best, False
    # double sweep: the eccentricity of a farthest vertex bounds the diameter from below
    first = space.bfs(component[0])
    far = max(first.values())
    start = min(k for k, d in first.items() if d == far)
    return max(space.bfs(start).values()), True


def mixing_report(g: Graph, palette: int, budget: int = DEFAULT_STATE_BUDGET,
                  diameter_limit: int = DEFAULT_DIAMETER_LIMIT) -> MixingReport:
    """
    Decides whether g is palette-mixing by exhaustive search over R_l(g).
    """
    space = ReconfigurationSpace(g, palette, budget)
    comps = space.components()
    sizes = tuple(len(c) for c in comps)
    connected = len(comps) <= 1
    lower_bound = False
    if space.proper_count <= 1:
        diameter: Any = 0
    elif not connected:
        diameter = INFINITE
    else:
        diameter, lower_bound = _diameter(space, comps[0], diameter_limit)
    report = MixingReport(
        graph_size=g.vertex_count,
        palette=palette,
        proper_count=space.proper_count,
        is_connected=connected,
        diameter=diameter,
        frozen_count=sum(1 for s in sizes if s == 1),
        component_sizes=tuple(sorted(sizes)),
        states_explored=space.explored,
        diameter_is_lower_bound=lower_bound,
    )
    logger.info("R_%d(G) on %d vertices: %d colourings, %d components",
                palette, g.vertex_count, report.proper_count, len(sizes))
    return report


def oracle_distance(g: Graph, palette: int, a: Colouring, b: Colouring,
                    budget: int = DEFAULT_STATE_BUDGET) -> Optional[int]:
    """
    Length of a shortest a-b path in R_l(g), or None when no path exists.
    """
    space = ReconfigurationSpace(g, palette, budget)
    source, target = space.key_of(a), space.key_of(b)
    return space.bfs(source, target).get(target)


def oracle_path(g: Graph, palette: int, a: Colouring, b: Colouring,
                budget: int = DEFAULT_STATE_BUDGET) -> Optional[List[Tuple[int, int]]]:
    """
    Steps (vertex, new colour) of a shortest a-b path, or None.
    """
    space = ReconfigurationSpace(g, palette, budget)
    return space.shortest_path(space.key_of(a), space.key_of(b))


def frozen_colourings(g: Graph, palette: int, budget: int = DEFAULT_STATE_BUDGET) -> List[Colouring]:
    """
    The isolated vertices of R_l(g), in increasing StateKey order.
    """
    space = ReconfigurationSpace(g, palette, budget)
    return [
        Colouring(tuple(decode(int(key), g.vertex_count, palette)), palette)
        for key in space.proper_list if space.is_isolated(int(key))
    ]
