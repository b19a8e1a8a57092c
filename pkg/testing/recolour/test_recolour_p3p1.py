import pytest

from recoloureur.colouring.colouring_base import Colouring
from recoloureur.config import Settings
from recoloureur.errors import NotInClass, PaletteTooSmall
from recoloureur.families.families_basic import FamilySpec
from recoloureur.families.families_random import gen_random_in_class
from recoloureur.graph.graph_base import anticomponents, build_graph
from recoloureur.oracle.oracle_mixing import oracle_distance
from recoloureur.recolour.recolour_p3p1 import optimal_anticomponent_colourings, p3p1_chromatic_number, recolour_p3p1
from recoloureur.recolour.recolour_path import apply_and_validate

C4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


def _anticomponent_colours_disjoint(g, p):
    blocks = list(anticomponents(g))
    for colouring in p.colourings():
        seen = [colouring.used_colours(block) for block in blocks]
        for i in range(len(seen)):
            for j in range(i + 1, len(seen)):
                if seen[i] & seen[j]:
                    return False
    return True


def test_c4_between_all_three_colourings(sampler, rng):
    for _ in range(15):
        a, b = sampler(C4, 3, rng), sampler(C4, 3, rng)
        p = recolour_p3p1(C4, 3, a, b)
        final, ok, _ = apply_and_validate(C4, p)
        assert ok and final == b
        assert len(p) <= 24
        assert oracle_distance(C4, 3, a, b) <= len(p)


def test_identity():
    a = Colouring.of([1, 2, 1, 2], 3)
    assert len(recolour_p3p1(C4, 3, a, a)) == 0


def test_c6_is_rejected_with_witness():
    c6 = build_graph(6, [(v, (v + 1) % 6) for v in range(6)])
    with pytest.raises(NotInClass) as err:
        recolour_p3p1(c6, 4, Colouring.of([1, 2, 1, 2, 1, 2], 4), Colouring.of([2, 1, 2, 1, 2, 1], 4))
    assert err.value.witness_name == "P3+P1"
    assert len(err.value.witness) == 4


def test_palette_too_small():
    with pytest.raises(PaletteTooSmall):
        recolour_p3p1(C4, 2, Colouring.of([1, 2, 1, 2]), Colouring.of([2, 1, 2, 1]))


def test_anticomponent_colourings():
    parts = optimal_anticomponent_colourings(C4)
    assert [part.kind for part in parts] == ["p3", "p3"]
    assert p3p1_chromatic_number(C4) == 2


def test_random_instances(sampler, rng):
    settings = Settings()
    checked = 0
    for seed in range(60):
        g = gen_random_in_class(FamilySpec("random_p3p1_free", n=rng.randint(3, 10), seed=seed), settings)
        chi = p3p1_chromatic_number(g)
        palette = chi + 1 + seed % 3
        a, b = sampler(g, palette, rng), sampler(g, palette, rng)
        p = recolour_p3p1(g, palette, a, b)
        final, ok, _ = apply_and_validate(g, p)
        assert ok and final == b
        assert len(p) <= 6 * g.vertex_count
        assert p.max_per_vertex() <= 6
        assert _anticomponent_colours_disjoint(g, p)
        if palette ** g.vertex_count <= 20000:
            checked += 1
            assert oracle_distance(g, palette, a, b) <= len(p)
    assert checked > 0
