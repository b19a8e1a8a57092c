import random
from itertools import permutations

from recoloureur.graph.graph_base import build_graph, complement
from recoloureur.graph.graph_induced import find_induced_c5, find_induced_copy, is_h_free, verify_induced_copy
from recoloureur.hfree.hfree_catalogue import named_graph


def _cycle(n):
    return build_graph(n, [(v, (v + 1) % n) for v in range(n)])


def _random_graph(rng, n, p=0.5):
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def _brute_force_has_copy(g, h):
    k = h.vertex_count
    for phi in permutations(range(g.vertex_count), k):
        if verify_induced_copy(g, h, list(phi)):
            return True
    return False


def test_c6_contains_p3_plus_p1():
    witness = find_induced_copy(_cycle(6), named_graph("P3+P1"))
    assert witness is not None
    assert verify_induced_copy(_cycle(6), named_graph("P3+P1"), witness)


def test_c4_is_not_induced_in_k4():
    assert is_h_free(build_graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)]), named_graph("C4"))


def test_find_induced_c5():
    assert find_induced_c5(_cycle(6)) is None
    seed = find_induced_c5(_cycle(5))
    assert sorted(seed) == [0, 1, 2, 3, 4]
    g = _cycle(5)
    assert all(g.has_edge(seed[i], seed[(i + 1) % 5]) for i in range(5))


def test_search_agrees_with_brute_force():
    rng = random.Random(7)
    names = ["P4", "C4", "paw", "claw", "2K2", "co-diamond"]
    for _ in range(25):
        g = _random_graph(rng, 6)
        for name in names:
            h = named_graph(name)
            found = find_induced_copy(g, h)
            assert (found is not None) == _brute_force_has_copy(g, h)
            if found is not None:
                assert verify_induced_copy(g, h, found)


def test_complement_duality():
    rng = random.Random(11)
    pairs = [("2K2", "C4"), ("claw", "co-claw"), ("paw", "P3+P1"), ("diamond", "co-diamond"), ("P4", "P4")]
    for _ in range(30):
        g = _random_graph(rng, 7)
        for name, co_name in pairs:
            assert is_h_free(g, named_graph(name)) == is_h_free(complement(g), named_graph(co_name))
