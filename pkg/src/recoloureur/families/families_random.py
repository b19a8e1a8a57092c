import logging
import random
from typing import Callable, Dict, List, Optional, Set, Tuple

from recoloureur.config import Settings
from recoloureur.errors import BadParams, GenerationFailed
from recoloureur.families.families_basic import FamilySpec
from recoloureur.graph.graph_base import Graph, build_graph, is_connected
from recoloureur.validator import Validator

logger = logging.getLogger(__name__)

Edges = List[Tuple[int, int]]

CLASS_OF_FAMILY: Dict[str, List[str]] = {
    "random_p3p1_free": ["P3+P1"],
    "random_2k2c4_free": ["2K2", "C4"],
    "random_p5c4_free": ["P5", "C4"],
    "random_3k1_free": ["3K1"],
}


def _shuffled(rng: random.Random, n: int, edges: Edges) -> Graph:
    labels = list(range(n))
    rng.shuffle(labels)
    return build_graph(n, [(labels[u], labels[v]) for u, v in edges])


def _split_sizes(rng: random.Random, total: int, parts: int) -> List[int]:
    cuts = sorted(rng.sample(range(1, total), parts - 1)) if parts > 1 else []
    bounds = [0] + cuts + [total]
    return [bounds[k + 1] - bounds[k] for k in range(parts)]


# ---------------------------------------------------------
# (P3+P1)-free: join of P3-free and 3K1-free anticomponents
# ---------------------------------------------------------

def _disjoint_cliques(rng: random.Random, members: List[int]) -> Edges:
    edges = []
    remaining = list(members)
    while remaining:
        size = rng.randint(1, len(remaining))
        clique, remaining = remaining[:size], remaining[size:]
        edges.extend((u, v) for k, u in enumerate(clique) for v in clique[k + 1:])
    return edges


def _co_triangle_free(rng: random.Random, members: List[int]) -> Edges:
    """
    Complement of a random triangle-free graph on `members`.
    """
    neighbours: Dict[int, Set[int]] = {v: set() for v in members}
    pairs = [(u, v) for k, u in enumerate(members) for v in members[k + 1:]]
    rng.shuffle(pairs)
    for u, v in pairs:
        if rng.random() < 0.5 and not neighbours[u] & neighbours[v]:
            neighbours[u].add(v)
            neighbours[v].add(u)
    return [(u, v) for u, v in pairs if v not in neighbours[u]]


def _random_p3p1_free(rng: random.Random, spec: FamilySpec) -> Graph:
    n = spec.n or rng.randint(4, 12)
    parts = rng.randint(1, min(3, n))
    edges: Edges = []
    groups: List[List[int]] = []
    start = 0
    for size in _split_sizes(rng, n, parts):
        members = list(range(start, start + size))
        start += size
        if rng.random() < 0.5:
            edges.extend(_disjoint_cliques(rng, members))
        else:
            edges.extend(_co_triangle_free(rng, members))
        groups.append(members)
    for k, left in enumerate(groups):
        for right in groups[k + 1:]:
            edges.extend((u, v) for u in left for v in right)
    return _shuffled(rng, n, edges)


def _random_3k1_free(rng: random.Random, spec: FamilySpec) -> Graph:
    n = spec.n or rng.randint(2, 10)
    return _shuffled(rng, n, _co_triangle_free(rng, list(range(n))))


# ---------------------------------------------------------
# (2K2,C4)-free: clique Q, independent set I, optional C5
# ---------------------------------------------------------

def _random_2k2c4_free(rng: random.Random, spec: FamilySpec) -> Graph:
    """
    I-vertices see prefixes u_1..u_t of the clique, so their neighbourhoods
    form a chain; the optional C5 is complete to Q and anticomplete to I.
    """
    with_c5 = rng.random() < 0.5
    q = spec.q if spec.q is not None else rng.randint(1, 4)
    i = spec.i if spec.i is not None else rng.randint(0, 5)
    n = q + i + (5 if with_c5 else 0)
    clique = list(range(q))
    independent = list(range(q, q + i))
    edges: Edges = [(u, v) for u in clique for v in clique if u < v]
    for v in independent:
        t = rng.randint(0, q - 1) if q else 0
        edges.extend((clique[k], v) for k in range(t))
    if with_c5:
        cycle = list(range(q + i, n))
        edges.extend((cycle[k], cycle[(k + 1) % 5]) for k in range(5))
        edges.extend((u, v) for u in clique for v in cycle)
    return _shuffled(rng, n, edges)


# ---------------------------------------------------------
# Connected (P5,C4)-free: threshold core plus C5 blow-ups
# ---------------------------------------------------------

def _random_p5c4_free(rng: random.Random, spec: FamilySpec) -> Graph:
    """
    The core is a clique K with extra vertices each joined to a non-empty
    prefix of K (a connected threshold graph, hence chordal). With
    probability 2/3 up to three C5 blow-ups are attached, each complete to
    a non-empty prefix of K and anticomplete to everything else. Prefixes
    are nested, so no induced P5 crosses K. A single blow-up may stand
    alone with an empty core; several need at least one core vertex.
    """
    budget = spec.n or rng.randint(5, 13)
    most = max([m for m in (1, 2, 3) if 5 * m + int(m > 1) <= budget], default=0)
    blowups = rng.randint(1, most) if most and rng.random() < 2 / 3 else 0
    spare = budget - 5 * blowups - int(blowups > 1)
    sizes = [[1] * 5 for _ in range(blowups)]
    for _ in range(rng.randint(0, min(3, spare)) if blowups else 0):
        sizes[rng.randrange(blowups)][rng.randrange(5)] += 1
    core = budget - sum(sum(parts) for parts in sizes)
    k = rng.randint(1, min(4, core)) if core else 0
    edges: Edges = [(u, v) for u in range(k) for v in range(u + 1, k)]
    for v in range(k, core):
        t = rng.randint(1, k)
        edges.extend((u, v) for u in range(t))
    n = core
    for parts in sizes:
        groups = []
        for size in parts:
            groups.append(list(range(n, n + size)))
            n += size
        for j, group in enumerate(groups):
            edges.extend((u, v) for u in group for v in group if u < v)
            edges.extend((u, v) for u in group for v in groups[(j + 1) % 5])
        attach = rng.randint(1, k) if k else 0
        edges.extend((u, v) for u in range(attach) for group in groups for v in group)
    return _shuffled(rng, n, edges)


GENERATORS: Dict[str, Callable[[random.Random, FamilySpec], Graph]] = {
    "random_p3p1_free": _random_p3p1_free,
    "random_2k2c4_free": _random_2k2c4_free,
    "random_p5c4_free": _random_p5c4_free,
    "random_3k1_free": _random_3k1_free,
}


def in_class(g: Graph, family: str) -> bool:
    validator = Validator()
    if not all(validator.is_free(g, name) for name in CLASS_OF_FAMILY[family]):
        return False
    return family != "random_p5c4_free" or is_connected(g)


def gen_random_in_class(spec: FamilySpec, settings: Optional[Settings] = None) -> Graph:
    """
    A random graph of the requested class, deterministic in spec.seed.
    Every draw is verified; GenerationFailed after settings.generation_retries
    rejected draws.
    """
    settings = settings or Settings()
    if spec.family not in GENERATORS:
        raise BadParams(f"{spec.family} is not a random family")
    rng = random.Random(spec.seed)
    for attempt in range(settings.generation_retries):
        g = GENERATORS[spec.family](rng, spec)
        if in_class(g, spec.family):
            logger.debug("%s seed %d: %d vertices after %d attempts",
                         spec.family, spec.seed, g.vertex_count, attempt + 1)
            return g
        logger.warning("%s seed %d: draw %d left the class", spec.family, spec.seed, attempt + 1)
    raise GenerationFailed(f"{spec.family} seed {spec.seed}: no valid graph in {settings.generation_retries} draws")
