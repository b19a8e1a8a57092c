from dataclasses import dataclass
from typing import Dict, Optional

from recoloureur.errors import BadParams
from recoloureur.graph.graph_base import Graph, build_graph

BASIC_FAMILIES = ("complete", "path", "cycle", "complete_bipartite")
WITNESS_FAMILIES = ("gp", "bp", "pendant_extension")
RANDOM_FAMILIES = ("random_p3p1_free", "random_2k2c4_free", "random_p5c4_free", "random_3k1_free")
FAMILY_NAMES = BASIC_FAMILIES + WITNESS_FAMILIES + RANDOM_FAMILIES


@dataclass(frozen=True)
class FamilySpec:
    """
    A family name plus its integer parameters. Unused parameters stay None.
    """
    family: str
    p: Optional[int] = None
    q: Optional[int] = None
    n: Optional[int] = None
    i: Optional[int] = None
    seed: int = 0

    def require(self, name: str, minimum: int) -> int:
        value = getattr(self, name)
        if value is None:
            raise BadParams(f"family {self.family} needs --{name}")
        if value < minimum:
            raise BadParams(f"family {self.family} needs {name} >= {minimum}, got {value}")
        return value

    def validate(self) -> "FamilySpec":
        if self.family not in FAMILY_NAMES:
            raise BadParams(f"unknown family {self.family!r}; expected one of {', '.join(FAMILY_NAMES)}")
        if self.family == "gp":
            self.require("p", 1)
        elif self.family == "bp":
            self.require("p", 3)
        elif self.family == "pendant_extension":
            self.require("i", 2)
        elif self.family == "complete_bipartite":
            self.require("p", 1)
            self.require("q", 1)
        elif self.family in BASIC_FAMILIES:
            self.require("n", 3 if self.family == "cycle" else 1)
        return self

    def to_dict(self) -> Dict[str, object]:
        out = {"family": self.family, "seed": self.seed}
        for key in ("p", "q", "n", "i"):
            if getattr(self, key) is not None:
                out[key] = getattr(self, key)
        return out


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(v, v + 1) for v in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise BadParams(f"a cycle needs at least 3 vertices, got {n}")
    return build_graph(n, [(v, (v + 1) % n) for v in range(n)])


def complete_bipartite_graph(p: int, q: int) -> Graph:
    return build_graph(p + q, [(u, p + v) for u in range(p) for v in range(q)])


def gen_basic(spec: FamilySpec) -> Graph:
    """
    Paths and cycles run in index order; complete bipartite graphs put the
    p left vertices first.
    """
    spec.validate()
    if spec.family == "complete":
        return complete_graph(spec.n)
    if spec.family == "path":
        return path_graph(spec.n)
    if spec.family == "cycle":
        return cycle_graph(spec.n)
    if spec.family == "complete_bipartite":
        return complete_bipartite_graph(spec.p, spec.q)
    raise BadParams(f"{spec.family} is not a basic family")
