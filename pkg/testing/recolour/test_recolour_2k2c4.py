import pytest

from recoloureur.colouring.colouring_base import Colouring
from recoloureur.colouring.colouring_chromatic import chromatic_number_exact
from recoloureur.errors import NotInClass
from recoloureur.families.families_basic import FamilySpec
from recoloureur.families.families_random import gen_random_in_class
from recoloureur.graph.graph_base import build_graph
from recoloureur.oracle.oracle_mixing import oracle_distance
from recoloureur.recolour.recolour_2k2c4 import recolour_2k2c4
from recoloureur.recolour.recolour_path import apply_and_validate

C5 = build_graph(5, [(v, (v + 1) % 5) for v in range(5)])


def _renaming_counts(p):
    start = len(p.steps) - p.phases.get("normalise_target", 0) - p.phases.get("rename", 0)
    middle = p.steps[start:start + p.phases.get("rename", 0)]
    counts = {}
    for step in middle:
        counts[step.vertex] = counts.get(step.vertex, 0) + 1
    return counts


def test_split_star(graph_file):
    star = graph_file("split_star.txt")
    a, b = Colouring.of([1, 2, 2, 2], 3), Colouring.of([2, 1, 1, 1], 3)
    p = recolour_2k2c4(star, 3, a, b)
    final, ok, _ = apply_and_validate(star, p)
    assert ok and final == b
    assert len(p) <= 16
    assert oracle_distance(star, 3, a, b) <= len(p)


def test_c5_all_pairs(sampler, rng):
    for _ in range(20):
        a, b = sampler(C5, 4, rng), sampler(C5, 4, rng)
        p = recolour_2k2c4(C5, 4, a, b)
        final, ok, _ = apply_and_validate(C5, p)
        assert ok and final == b
        assert len(p) <= 20


def test_three_coloured_c5_gets_spread(graph_file):
    apex = graph_file("c5_apex.txt")
    a = Colouring.of([1, 2, 1, 2, 3, 4], 5)
    b = Colouring.of([2, 3, 2, 3, 1, 5], 5)
    p = recolour_2k2c4(apex, 5, a, b)
    final, ok, _ = apply_and_validate(apex, p)
    assert ok and final == b
    assert len(p) <= 4 * 6


def test_2k2_is_rejected():
    with pytest.raises(NotInClass):
        recolour_2k2c4(build_graph(4, [(0, 1), (2, 3)]), 3, Colouring.of([1, 2, 1, 2], 3),
                       Colouring.of([2, 1, 2, 1], 3))


def test_random_instances(sampler, rng):
    for seed in range(60):
        g = gen_random_in_class(FamilySpec("random_2k2c4_free", seed=seed))
        chi = chromatic_number_exact(g)[0]
        palette = chi + 1 + seed % 3
        a, b = sampler(g, palette, rng), sampler(g, palette, rng)
        p = recolour_2k2c4(g, palette, a, b)
        final, ok, _ = apply_and_validate(g, p)
        assert ok and final == b
        assert len(p) <= 4 * g.vertex_count
        assert max(_renaming_counts(p).values(), default=0) <= 2
