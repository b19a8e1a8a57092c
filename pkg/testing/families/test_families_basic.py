import pytest

from recoloureur.errors import BadParams
from recoloureur.families.families_basic import FamilySpec, gen_basic


@pytest.mark.parametrize("spec, vertices, edges", [
    (FamilySpec("complete", n=5), 5, 10),
    (FamilySpec("path", n=4), 4, 3),
    (FamilySpec("cycle", n=6), 6, 6),
    (FamilySpec("complete_bipartite", p=2, q=3), 5, 6),
])
def test_sizes(spec, vertices, edges):
    g = gen_basic(spec)
    assert g.vertex_count == vertices
    assert g.edge_count == edges


def test_bipartite_sides():
    g = gen_basic(FamilySpec("complete_bipartite", p=2, q=3))
    assert g.is_independent([0, 1]) and g.is_independent([2, 3, 4])
    assert g.is_complete_to([0, 1], [2, 3, 4])


@pytest.mark.parametrize("spec", [
    FamilySpec("cycle", n=2),
    FamilySpec("path"),
    FamilySpec("bp", p=2),
    FamilySpec("nonsense", n=3),
])
def test_bad_params(spec):
    with pytest.raises(BadParams):
        spec.validate()


def test_to_dict_skips_unset():
    assert FamilySpec("gp", p=3, seed=7).to_dict() == {"family": "gp", "seed": 7, "p": 3}
