from dataclasses import dataclass
from typing import Dict, List

from recoloureur.errors import UnknownName
from recoloureur.graph.graph_base import Graph, build_graph


@dataclass(frozen=True)
class NamedGraph:
    name: str
    graph: Graph


# Hand-coded edge lists; the catalogue is ground truth for every class check.
_FOUR_VERTEX = [
    ("4K1", []),
    ("co-diamond", [(0, 1)]),
    ("2K2", [(0, 1), (2, 3)]),
    ("P3+P1", [(0, 1), (1, 2)]),
    ("claw", [(0, 1), (0, 2), (0, 3)]),
    ("P4", [(0, 1), (1, 2), (2, 3)]),
    ("co-claw", [(0, 1), (0, 2), (1, 2)]),
    ("paw", [(0, 1), (0, 2), (1, 2), (0, 3)]),
    ("C4", [(0, 1), (1, 2), (2, 3), (3, 0)]),
    ("diamond", [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
    ("K4", [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
]

_FIVE_VERTEX = [
    ("5K1", []),
    ("K1,4", [(0, 1), (0, 2), (0, 3), (0, 4)]),
    ("claw+K1", [(0, 1), (0, 2), (0, 3)]),
    ("K2,3", [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]),
    ("banner", [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]),
    ("P5", [(0, 1), (1, 2), (2, 3), (3, 4)]),
    ("C5", [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
]

# Three-vertex graphs; used as class tests but not catalogue entries.
_THREE_VERTEX = [
    ("3K1", []),
    ("P2+P1", [(0, 1)]),
    ("P3", [(0, 1), (1, 2)]),
    ("K3", [(0, 1), (0, 2), (1, 2)]),
]

FOUR_VERTEX_NAMES = [name for name, _ in _FOUR_VERTEX]
FIVE_VERTEX_NAMES = [name for name, _ in _FIVE_VERTEX]


def _named(entries, order: int) -> List[NamedGraph]:
    return [NamedGraph(name, build_graph(order, edges)) for name, edges in entries]


def catalogue() -> List[NamedGraph]:
    """
    The 11 four-vertex graphs followed by the 7 named five-vertex graphs.
    """
    return _named(_FOUR_VERTEX, 4) + _named(_FIVE_VERTEX, 5)


def patterns() -> Dict[str, Graph]:
    """
    Every named pattern, catalogue entries plus the three-vertex graphs.
    """
    table = {ng.name: ng.graph for ng in _named(_THREE_VERTEX, 3)}
    table.update({ng.name: ng.graph for ng in catalogue()})
    return table


def named_graph(name: str) -> Graph:
    table = patterns()
    if name not in table:
        raise UnknownName(f"unknown graph name {name!r}")
    return table[name]
