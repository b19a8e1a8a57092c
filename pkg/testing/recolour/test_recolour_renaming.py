import random

import pytest

from recoloureur.colouring.colouring_base import Colouring, colour_classes
from recoloureur.errors import PaletteTooSmall, PartitionMismatch
from recoloureur.graph.graph_base import build_graph
from recoloureur.oracle.oracle_mixing import oracle_distance
from recoloureur.recolour.recolour_path import apply_and_validate
from recoloureur.recolour.recolour_renaming import renaming_path

K2 = build_graph(2, [(0, 1)])
K3 = build_graph(3, [(0, 1), (0, 2), (1, 2)])


def test_identity_is_empty():
    a = Colouring.of([1, 2], 3)
    assert len(renaming_path(K2, 3, a, a)) == 0


def test_k2_swap_matches_oracle():
    a, b = Colouring.of([1, 2], 3), Colouring.of([2, 1], 3)
    p = renaming_path(K2, 3, a, b)
    assert len(p) == 3 == oracle_distance(K2, 3, a, b)
    assert sorted(p.per_vertex_counts.values()) == [1, 2]
    assert apply_and_validate(K2, p).final == b


def test_k3_rotation():
    a, b = Colouring.of([1, 2, 3], 4), Colouring.of([2, 3, 1], 4)
    p = renaming_path(K3, 4, a, b)
    final, ok, _ = apply_and_validate(K3, p)
    assert ok and final == b
    assert len(p) <= 6 and p.max_per_vertex() <= 2


def test_errors():
    p2_plus_k1 = build_graph(3, [(0, 1)])
    with pytest.raises(PartitionMismatch):
        renaming_path(p2_plus_k1, 4, Colouring.of([1, 2, 3], 4), Colouring.of([1, 2, 1], 4))
    with pytest.raises(PaletteTooSmall):
        renaming_path(K2, 2, Colouring.of([1, 2]), Colouring.of([2, 1]))


def test_random_same_partition_pairs():
    rng = random.Random(4)
    for _ in range(500):
        n = rng.randint(1, 9)
        g = build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4])
        # greedy colouring, then a random injective relabelling into a larger palette
        colours = []
        for v in range(n):
            taken = {colours[u] for u in g.neighbours(v) if u < v}
            colours.append(min(c for c in range(1, n + 2) if c not in taken))
        k = len(set(colours))
        palette = k + rng.randint(1, 3)
        relabel = rng.sample(range(1, palette + 1), k)
        order = sorted(set(colours))
        a = Colouring(tuple(colours), palette)
        b = Colouring(tuple(relabel[order.index(c)] for c in colours), palette)
        p = renaming_path(g, palette, a, b)
        final, ok, _ = apply_and_validate(g, p)
        assert ok and final == b
        assert p.max_per_vertex() <= 2
        assert len(colour_classes(final)) == k
