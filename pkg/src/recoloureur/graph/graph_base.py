from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, List, Sequence, Tuple

from recoloureur.errors import IndexOutOfRange, SelfLoop

VertexSet = FrozenSet[int]


# ---------------------------------------------------------
# Bit-set helpers
# ---------------------------------------------------------

def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    """
    Yields the set bits of `mask` in increasing order.
    """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_of(mask: int) -> VertexSet:
    return frozenset(iter_bits(mask))


# ---------------------------------------------------------
# Graph
# ---------------------------------------------------------

class Graph:
    """
    Finite simple undirected graph on vertices 0..n-1.

    Adjacency is stored as one integer bit set per vertex, so adjacency tests,
    common-neighbour tests and completeness checks are single bit operations.
    Instances are immutable.
    """

    __slots__ = ("_n", "_adj")

    def __init__(self, vertex_count: int, adjacency: Sequence[int]):
        if len(adjacency) != vertex_count:
            raise IndexOutOfRange("adjacency length differs from vertex_count")
        self._n = vertex_count
        self._adj: Tuple[int, ...] = tuple(adjacency)

    # --- basic queries ---

    @property
    def vertex_count(self) -> int:
        return self._n

    def __len__(self) -> int:
        return self._n

    def vertices(self) -> range:
        return range(self._n)

    def mask(self, v: int) -> int:
        return self._adj[v]

    @property
    def all_mask(self) -> int:
        return (1 << self._n) - 1

    def neighbours(self, v: int) -> VertexSet:
        return bits_of(self._adj[v])

    def closed_mask(self, v: int) -> int:
        return self._adj[v] | (1 << v)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return bin(self._adj[v]).count("1")

    def degrees(self) -> List[int]:
        return [self.degree(v) for v in range(self._n)]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> List[Tuple[int, int]]:
        """
        Edges as (u, v) pairs with u < v, sorted lexicographically.
        """
        return [(u, v) for u in range(self._n) for v in iter_bits(self._adj[u] >> (u + 1) << (u + 1))]

    # --- set predicates ---

    def is_clique(self, vertices: Iterable[int]) -> bool:
        members = list(vertices)
        m = mask_of(members)
        return all((m & ~(1 << v)) & ~self._adj[v] == 0 for v in members)

    def is_independent(self, vertices: Iterable[int]) -> bool:
        members = list(vertices)
        m = mask_of(members)
        return all(self._adj[v] & m == 0 for v in members)

    def is_complete_to(self, xs: Iterable[int], ys: Iterable[int]) -> bool:
        ym = mask_of(ys)
        return all(self._adj[x] & ym == ym for x in xs)

    def is_anticomplete_to(self, xs: Iterable[int], ys: Iterable[int]) -> bool:
        ym = mask_of(ys)
        return all(self._adj[x] & ym == 0 for x in xs)

    # --- derived graphs ---

    def induced(self, vertices: Iterable[int]) -> Tuple["Graph", List[int]]:
        """
        Subgraph induced by `vertices`.

        Returns the subgraph, relabelled 0..k-1 in increasing host order, and
        the list mapping each new index to its host vertex.
        """
        order = sorted(set(vertices))
        position = {v: i for i, v in enumerate(order)}
        adjacency = []
        for v in order:
            adjacency.append(mask_of(position[u] for u in iter_bits(self._adj[v]) if u in position))
        return Graph(len(order), adjacency), order

    def without(self, vertices: Iterable[int]) -> Tuple["Graph", List[int]]:
        drop = set(vertices)
        return self.induced(v for v in range(self._n) if v not in drop)

    # --- dunder ---

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.edge_count})"


@dataclass(frozen=True)
class Partition:
    """
    Pairwise-disjoint, non-empty vertex blocks ordered by smallest member.
    """
    blocks: Tuple[VertexSet, ...]

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]]) -> "Partition":
        frozen = [frozenset(b) for b in blocks if b]
        return cls(tuple(sorted(frozen, key=min)))

    def ground(self) -> VertexSet:
        return frozenset().union(*self.blocks) if self.blocks else frozenset()

    def block_of(self, v: int) -> VertexSet:
        for block in self.blocks:
            if v in block:
                return block
        raise IndexOutOfRange(f"vertex {v} is not in the partition")

    def sizes(self) -> List[int]:
        return [len(b) for b in self.blocks]

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)


# ---------------------------------------------------------
# Constructions
# ---------------------------------------------------------

def build_graph(vertex_count: int, edges: Iterable[Tuple[int, int]]) -> Graph:
    """
    Builds a graph from an edge list; duplicates and orientation are ignored.
    """
    if vertex_count < 0:
        raise IndexOutOfRange("vertex_count must be non-negative")
    adjacency = [0] * vertex_count
    for u, v in edges:
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise IndexOutOfRange(f"edge ({u}, {v}) outside 0..{vertex_count - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        adjacency[u] |= 1 << v
        adjacency[v] |= 1 << u
    return Graph(vertex_count, adjacency)


def empty_graph(vertex_count: int = 0) -> Graph:
    return Graph(vertex_count, [0] * vertex_count)


def complement(g: Graph) -> Graph:
    full = g.all_mask
    return Graph(g.vertex_count, [full & ~g.mask(v) & ~(1 << v) for v in g.vertices()])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.vertex_count
    return Graph(shift + h.vertex_count,
                 [g.mask(v) for v in g.vertices()] + [h.mask(v) << shift for v in h.vertices()])


def join(g: Graph, h: Graph) -> Graph:
    """
    Disjoint union plus every edge between g and h.
    """
    return complement(disjoint_union(complement(g), complement(h)))


def substitute(g: Graph, v: int, h: Graph) -> Graph:
    """
    Substitutes h for the vertex v of g.

    The copy of h takes the positions v..v+|h|-1; the vertices of g after v
    shift up by |h|-1, so substituting into every vertex in turn keeps the
    blown-up parts contiguous and in the original order.
    """
    n = g.vertex_count
    if not 0 <= v < n:
        raise IndexOutOfRange(f"vertex {v} outside 0..{n - 1}")
    k = h.vertex_count

    def relabel(u: int) -> int:
        return u if u < v else u + k - 1

    copy_mask = ((1 << k) - 1) << v
    adjacency = [0] * (n - 1 + k)
    outside = g.mask(v)
    for u in g.vertices():
        if u == v:
            continue
        m = mask_of(relabel(w) for w in iter_bits(g.mask(u)) if w != v)
        if outside >> u & 1:
            m |= copy_mask
        adjacency[relabel(u)] = m
    outside_relabelled = mask_of(relabel(w) for w in iter_bits(outside))
    for i in h.vertices():
        adjacency[v + i] = (h.mask(i) << v) | outside_relabelled
    return Graph(n - 1 + k, adjacency)


# ---------------------------------------------------------
# Components
# ---------------------------------------------------------

def component_masks(g: Graph, within: int = -1) -> List[int]:
    """
    Components of the subgraph induced by the bit set `within`, as masks,
    ordered by smallest member.
    """
    remaining = g.all_mask if within < 0 else within & g.all_mask
    found = []
    while remaining:
        frontier = remaining & -remaining
        comp = 0
        while frontier:
            comp |= frontier
            grown = 0
            for u in iter_bits(frontier):
                grown |= g.mask(u)
            frontier = grown & remaining & ~comp
        found.append(comp)
        remaining &= ~comp
    return found


def components(g: Graph) -> Partition:
    return Partition(tuple(bits_of(m) for m in component_masks(g)))


def anticomponents(g: Graph) -> Partition:
    return components(complement(g))


def is_connected(g: Graph) -> bool:
    return len(component_masks(g)) <= 1
