import logging
from typing import Any, Dict, List, Optional, Sequence, Tuple

from recoloureur.colouring.colouring_base import Colouring
from recoloureur.colouring.colouring_chromatic import chromatic_number_exact
from recoloureur.config import Settings
from recoloureur.errors import Disconnected, NotInClass, TooLarge, UnknownName
from recoloureur.graph.graph_base import Graph, component_masks, iter_bits

# --- Constructive algorithms ---
from recoloureur.recolour.recolour_2k2c4 import Recolour2K2C4
from recoloureur.recolour.recolour_chordal import RecolourChordal
from recoloureur.recolour.recolour_p3p1 import RecolourP3P1
from recoloureur.recolour.recolour_p5c4 import RecolourP5C4
from recoloureur.recolour.recolour_path import RecolourPath, apply_and_validate
from recoloureur.recolour.recolour_renaming import RecolourRenaming
from recoloureur.validator import Validator

logger = logging.getLogger(__name__)

ALGORITHM_NAMES = ("auto", "renaming", "p3p1", "two_k2_c4", "chordal", "p5c4")


class Orchestrator:
    """
    Chooses and runs the constructive recolouring algorithms.

    - get_applicable(g): which algorithms accept g (independent checks).
    - recolour(g, l, a, b): runs one algorithm, or the first applicable one
      in auto order.
    """

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or Settings()
        self.algorithms_map: Dict[str, Any] = {}

        self.p3p1 = RecolourP3P1()
        self.two_k2_c4 = Recolour2K2C4()
        self.chordal = RecolourChordal()
        self.p5c4 = RecolourP5C4(self.settings)
        self.renaming = RecolourRenaming()

        # Auto order: cheapest applicable class first
        self.auto_order = [self.p3p1, self.two_k2_c4, self.chordal, self.p5c4]
        self.all_algorithms = self.auto_order + [self.renaming]

        for algorithm in self.all_algorithms:
            self.algorithms_map[algorithm.algorithm_name] = algorithm

    # -------------------------------------------------------------------------
    # 1. GET APPLICABLE
    # -------------------------------------------------------------------------

    def get_applicable(self, g: Graph, algorithm_names: Sequence[str] = ()) -> List[Tuple[str, str, bool]]:
        """
        Returns: List of (graph_class, algorithm_name, accepts)
        """
        results = []
        for algorithm in self.auto_order:
            if algorithm_names and algorithm.algorithm_name not in algorithm_names:
                continue
            try:
                results.append(algorithm.accepts(g))
            except Exception as e:
                logger.warning("Algorithm %s failed: %s", algorithm.algorithm_name, e)
                results.append((algorithm.graph_class, algorithm.algorithm_name, False))
        return results

    def select(self, g: Graph) -> Any:
        for graph_class, name, ok in self.get_applicable(g):
            if ok:
                logger.info("auto selected %s (%s)", name, graph_class)
                return self.algorithms_map[name]
        hit = Validator().first_witness(g, ["P5", "C4"])
        if hit is not None:
            name, witness = hit
            raise NotInClass(f"graph is in no supported class: induced {name} on {witness}", name, witness)
        first = sorted(iter_bits(component_masks(g)[0]))
        raise Disconnected(f"graph is in no supported class and is disconnected; component {first}", None, first)

    # -------------------------------------------------------------------------
    # 2. RECOLOUR
    # -------------------------------------------------------------------------

    def recolour(self, g: Graph, palette: int, a: Colouring, b: Colouring,
                 algorithm: str = "auto") -> Tuple[str, RecolourPath]:
        """
        Returns the algorithm actually used and the path from a to b.
        """
        if algorithm == "auto":
            chosen = self.select(g)
        elif algorithm in self.algorithms_map:
            chosen = self.algorithms_map[algorithm]
        else:
            raise UnknownName(f"unknown algorithm {algorithm!r}; expected one of {', '.join(ALGORITHM_NAMES)}")
        return chosen.algorithm_name, chosen.recolour(g, palette, a, b)

    # -------------------------------------------------------------------------
    # 3. GET DETAILED REPORT
    # -------------------------------------------------------------------------

    def get_detailed_report(self, g: Graph, palette: int, a: Colouring, b: Colouring,
                            algorithm: str = "auto") -> Dict[str, Any]:
        """
        Runs the recolouring and replays it.
        - 'applicable': the per-class acceptance table.
        - 'path': the RecolourPath itself.
        - 'chromatic_number': None above settings.exact_chromatic_bound.
        """
        applicable = self.get_applicable(g)
        name, path = self.recolour(g, palette, a, b, algorithm)
        replay = apply_and_validate(g, path)
        n = g.vertex_count
        try:
            chi: Optional[int] = chromatic_number_exact(g, self.settings.exact_chromatic_bound)[0]
        except TooLarge as e:
            logger.warning("chromatic number skipped: %s", e)
            chi = None
        return {
            "vertices": n,
            "palette": palette,
            "chromatic_number": chi,
            "algorithm": name,
            "applicable": applicable,
            "path": path,
            "summary": {
                "length": len(path),
                "max_per_vertex": path.max_per_vertex(),
                "phases": dict(path.phases),
                "valid": replay.ok and replay.final.colours == b.colours,
                "length_per_vertex": len(path) / n if n else 0.0,
            },
        }
