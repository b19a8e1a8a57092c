import logging
from typing import Dict, Iterable, List, Optional, Tuple, Type

from recoloureur.errors import NotInClass, UnknownName
from recoloureur.graph.graph_base import Graph
from recoloureur.graph.graph_induced import find_induced_copy
from recoloureur.hfree.hfree_catalogue import patterns

logger = logging.getLogger(__name__)


class Validator:
    """
    Class-membership gatekeeper shared by every algorithm.

    Holds the named pattern graphs once and memoises induced-copy searches,
    so an algorithm, its dispatcher and its tests can ask the same question
    repeatedly at no extra cost.
    """
    _instance = None
    _patterns: Dict[str, Graph] = None
    _cache: Dict[Tuple[Graph, str], Optional[List[int]]] = None
    _cache_limit = 4096

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super(Validator, cls).__new__(cls)
            cls._patterns = patterns()
            cls._cache = {}
        return cls._instance

    def pattern(self, name: str) -> Graph:
        if name not in self._patterns:
            raise UnknownName(f"unknown graph name {name!r}")
        return self._patterns[name]

    def witness(self, g: Graph, name: str) -> Optional[List[int]]:
        """
        Host vertices of an induced copy of the named graph, or None.
        """
        key = (g, name)
        if key in self._cache:
            hit = self._cache[key]
            return list(hit) if hit is not None else None
        found = find_induced_copy(g, self.pattern(name))
        if len(self._cache) >= self._cache_limit:
            self._cache.clear()
        self._cache[key] = tuple(found) if found is not None else None
        return found

    def is_free(self, g: Graph, name: str) -> bool:
        return self.witness(g, name) is None

    def first_witness(self, g: Graph, names: Iterable[str]) -> Optional[Tuple[str, List[int]]]:
        for name in names:
            found = self.witness(g, name)
            if found is not None:
                return name, found
        return None

    def require_free(self, g: Graph, names: Iterable[str], label: str,
                     error: Type[NotInClass] = NotInClass) -> None:
        """
        Raises `error` with the first witness found when g is not free of every name.
        """
        hit = self.first_witness(g, names)
        if hit is not None:
            name, found = hit
            logger.info("graph rejected for %s: induced %s on %s", label, name, found)
            raise error(f"graph is not {label}: induced {name} on vertices {found}", name, found)
