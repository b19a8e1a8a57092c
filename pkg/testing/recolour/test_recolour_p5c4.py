import random

import pytest

from recoloureur.colouring.colouring_base import Colouring
from recoloureur.colouring.colouring_chromatic import chromatic_number_exact
from recoloureur.config import Settings
from recoloureur.errors import BlowupBaseTooLarge, Disconnected, NotInClass, NotTight
from recoloureur.families.families_basic import FamilySpec
from recoloureur.families.families_random import gen_random_in_class
from recoloureur.graph.graph_base import build_graph
from recoloureur.graph.graph_induced import find_induced_c5
from recoloureur.oracle.oracle_mixing import oracle_distance
from recoloureur.recolour.recolour_p5c4 import (
    _base_steps,
    blowup_decomposition,
    lift_over_tight_component,
    p5c4_chromatic_number,
    recolour_p5c4,
    split_off_blowup,
)
from recoloureur.recolour.recolour_path import RecolourPath, RecolourStep, apply_and_validate


def _outer(start, steps, palette):
    return RecolourPath(Colouring.of(start, palette), tuple(RecolourStep(v, c) for v, c in steps))


def test_c5_with_apex(graph_file, sampler, rng):
    g = graph_file("c5_apex.txt")
    for _ in range(10):
        a, b = sampler(g, 5, rng), sampler(g, 5, rng)
        p = recolour_p5c4(g, 5, a, b)
        final, ok, _ = apply_and_validate(g, p)
        assert ok and final == b
        assert oracle_distance(g, 5, a, b) <= len(p)


def test_chordal_input_uses_the_chordal_phase():
    p4 = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    p = recolour_p5c4(p4, 3, Colouring.of([1, 2, 1, 2], 3), Colouring.of([2, 1, 2, 1], 3))
    assert apply_and_validate(p4, p).ok
    assert set(p.phases) == {"chordal"}


def test_errors(graph_file):
    p5 = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    with pytest.raises(NotInClass):
        recolour_p5c4(p5, 3, Colouring.of([1, 2, 1, 2, 1], 3), Colouring.of([2, 1, 2, 1, 2], 3))
    with pytest.raises(Disconnected):
        recolour_p5c4(graph_file("c5_plus_k1.txt"), 4, Colouring.of([1, 2, 1, 2, 3, 1], 4),
                      Colouring.of([2, 1, 2, 1, 3, 1], 4))


def test_lift_unchanged_outside_clique():
    # path h - q - x: H = {0}, Q = {1}, outer graph on {1, 2}
    g = build_graph(3, [(0, 1), (1, 2)])
    start = Colouring.of([1, 2, 1], 3)
    lifted = lift_over_tight_component(g, [1], [0], _outer([2, 1], [(1, 3)], 3), [1, 2], start)
    assert [(s.vertex, s.new_colour) for s in lifted.steps] == [(2, 3)]
    empty = lift_over_tight_component(g, [1], [0], _outer([2, 1], [], 3), [1, 2], start)
    assert len(empty) == 0


def test_lift_repairs_the_component():
    g = build_graph(3, [(0, 1), (1, 2)])
    start = Colouring.of([1, 2, 3], 3)
    lifted = lift_over_tight_component(g, [1], [0], _outer([2, 3], [(0, 1)], 3), [1, 2], start)
    assert [(s.vertex, s.new_colour) for s in lifted.steps] == [(0, 3), (1, 1)]
    assert apply_and_validate(g, lifted).ok


def test_lift_rejects_loose_component():
    g = build_graph(3, [(0, 1), (0, 2)])
    with pytest.raises(NotTight):
        lift_over_tight_component(g, [1], [0], _outer([2, 1], [], 3), [1, 2], Colouring.of([1, 2, 2], 3))


def test_chromatic_number_by_decomposition():
    rng = random.Random(1)
    for seed in range(30):
        g = gen_random_in_class(FamilySpec("random_p5c4_free", n=rng.randint(5, 10), seed=seed))
        assert p5c4_chromatic_number(g) == chromatic_number_exact(g)[0]


def test_random_instances(sampler):
    rng = random.Random(21)
    cut_off, checked = 0, 0
    for seed in range(200):
        if cut_off >= 30:
            break
        g = gen_random_in_class(FamilySpec("random_p5c4_free", n=rng.randint(6, 10), seed=seed))
        chi = p5c4_chromatic_number(g)
        palette = chi + 1 + seed % 2
        a, b = sampler(g, palette, rng), sampler(g, palette, rng)
        p = recolour_p5c4(g, palette, a, b)
        final, ok, _ = apply_and_validate(g, p)
        assert ok and final == b
        if find_induced_c5(g) is not None and split_off_blowup(g)[1]:
            cut_off += 1
        if palette ** g.vertex_count <= 20000:
            checked += 1
            assert oracle_distance(g, palette, a, b) <= len(p)
    assert cut_off >= 30
    assert checked > 0


def test_nested_blowups_recurse_twice(sampler):
    rng = random.Random(5)
    nested = 0
    for seed in range(100):
        g = gen_random_in_class(FamilySpec("random_p5c4_free", n=rng.randint(11, 14), seed=seed))
        pieces, remainder = blowup_decomposition(g)
        if len(pieces) < 2:
            continue
        nested += 1
        assert remainder and all(clique for _, clique in pieces)
        assert p5c4_chromatic_number(g) == chromatic_number_exact(g)[0]
        chi = p5c4_chromatic_number(g)
        a, b = sampler(g, chi + 1, rng), sampler(g, chi + 1, rng)
        p = recolour_p5c4(g, chi + 1, a, b)
        final, ok, _ = apply_and_validate(g, p)
        assert ok and final == b
        if nested == 4:
            break
    assert nested == 4


def test_decomposition_of_a_single_blowup(graph_file):
    g = graph_file("c5_apex.txt")
    pieces, remainder = blowup_decomposition(g)
    assert len(pieces) == 1
    component, clique = pieces[0]
    assert len(component) == 5 and len(clique) == 1
    assert remainder == clique
    c5 = build_graph(5, [(v, (v + 1) % 5) for v in range(5)])
    assert blowup_decomposition(c5) == ([([0, 1, 2, 3, 4], [])], [])


def test_base_case_beyond_budget():
    c5 = build_graph(5, [(v, (v + 1) % 5) for v in range(5)])
    a, b = Colouring.of([1, 2, 1, 2, 3], 4), Colouring.of([2, 3, 2, 3, 4], 4)
    steps = _base_steps(c5, 4, a, b, Settings(state_budget=10))
    replay = apply_and_validate(c5, RecolourPath(a, tuple(RecolourStep(v, c) for v, c in steps)))
    assert replay.ok and replay.final == b
    c7 = build_graph(7, [(v, (v + 1) % 7) for v in range(7)])
    with pytest.raises(BlowupBaseTooLarge):
        _base_steps(c7, 4, Colouring.of([1, 2] * 3 + [3], 4), Colouring.of([2, 1] * 3 + [3], 4),
                    Settings(state_budget=10))
