import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Union

from recoloureur.errors import UnknownName
from recoloureur.families.families_witness import WitnessBundle, gen_bp, gen_gp
from recoloureur.graph.graph_base import Graph
from recoloureur.hfree.hfree_catalogue import FIVE_VERTEX_NAMES, FOUR_VERTEX_NAMES, catalogue
from recoloureur.validator import Validator

logger = logging.getLogger(__name__)

DEFAULT_GP = 2
DEFAULT_BP = 4


@dataclass(frozen=True)
class ClassEntry:
    name: str
    free: bool
    witness: Optional[List[int]]


@dataclass(frozen=True)
class ClassMembership:
    entries: List[ClassEntry]

    def is_free(self, name: str) -> bool:
        for entry in self.entries:
            if entry.name == name:
                return entry.free
        raise UnknownName(f"{name!r} is not in the catalogue")

    def free_of(self) -> List[str]:
        return [e.name for e in self.entries if e.free]

    def to_dict(self, graph_label: str = "") -> Dict[str, Any]:
        return {
            "graph": graph_label,
            "classes": [{"name": e.name, "free": e.free, "witness": e.witness} for e in self.entries],
        }


def classify(g: Graph) -> ClassMembership:
    """
    Freeness of g for every catalogue graph, with an induced copy when not free.
    """
    validator = Validator()
    entries = []
    for named in catalogue():
        found = validator.witness(g, named.name)
        entries.append(ClassEntry(named.name, found is None, found))
    return ClassMembership(entries)


# ---------------------------------------------------------
# Dichotomy table
# ---------------------------------------------------------

@dataclass(frozen=True)
class AlwaysMixing:
    h_name: str
    reason: str
    kind: str = "always_mixing"


@dataclass(frozen=True)
class Witness:
    h_name: str
    bundle: WitnessBundle
    kind: str = "witness"

    def certify(self) -> bool:
        """
        The bundle graph avoids h and its frozen colouring is frozen: h-free
        yet not (chi+1)-mixing.
        """
        checks = self.bundle.verify()
        free = Validator().is_free(self.bundle.graph, self.h_name)
        return free and checks.get("frozen", False) and all(checks.values())


@dataclass(frozen=True)
class External:
    h_name: str
    citation: str
    kind: str = "external"


DichotomyResult = Union[AlwaysMixing, Witness, External]

_ALWAYS_MIXING = {
    "P4": "P4-free graphs are (chi+1)-mixing",
    "P3+P1": "(P3+P1)-free graphs are l-mixing for l >= chi+1, diameter at most 6n",
}
_GP_NAMES = {"4K1", "C4", "claw"}
_BP_NAMES = {"K4", "diamond", "paw", "co-claw", "co-diamond"}
_EXTERNAL = {"2K2": "feghali2021"}


def dichotomy_witness(h_name: str, gp: int = DEFAULT_GP, bp: int = DEFAULT_BP) -> DichotomyResult:
    """
    Whether every H-free graph is (chi+1)-mixing, for a 4-vertex H.
    Witness results carry a G_p or B_p bundle that is H-free with a frozen
    colouring.
    """
    if h_name not in FOUR_VERTEX_NAMES:
        raise UnknownName(f"{h_name!r} is not a 4-vertex catalogue graph")
    if h_name in _ALWAYS_MIXING:
        return AlwaysMixing(h_name, _ALWAYS_MIXING[h_name])
    if h_name in _GP_NAMES:
        return Witness(h_name, gen_gp(gp))
    if h_name in _BP_NAMES:
        return Witness(h_name, gen_bp(bp))
    return External(h_name, _EXTERNAL[h_name])


_FIVE_VERTEX_TABLE = {
    "5K1": "gp",
    "K1,4": "gp",
    "claw+K1": "gp",
    "K2,3": "gp",
    "banner": "gp",
    "P5": "external",
    "C5": "bp",
}


def five_vertex_witnesses(gp: int = DEFAULT_GP, bp: int = DEFAULT_BP) -> Dict[str, DichotomyResult]:
    """
    The witness family for each named 5-vertex graph. G_p avoids 4K1, claw
    and C4, so it avoids every 5-vertex graph containing one of them; B_p is
    bipartite and so avoids C5.
    """
    result: Dict[str, DichotomyResult] = {}
    for name in FIVE_VERTEX_NAMES:
        family = _FIVE_VERTEX_TABLE[name]
        if family == "gp":
            result[name] = Witness(name, gen_gp(gp))
        elif family == "bp":
            result[name] = Witness(name, gen_bp(bp))
        else:
            result[name] = External(name, "feghali2021")
    return result
