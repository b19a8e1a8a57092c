import pytest

from recoloureur.errors import UnknownName
from recoloureur.hfree.hfree_catalogue import FIVE_VERTEX_NAMES, FOUR_VERTEX_NAMES, catalogue, named_graph


def test_catalogue_order():
    names = [ng.name for ng in catalogue()]
    assert len(names) == 18
    assert names == FOUR_VERTEX_NAMES + FIVE_VERTEX_NAMES


@pytest.mark.parametrize("name, vertices, edges", [
    ("4K1", 4, 0),
    ("co-diamond", 4, 1),
    ("paw", 4, 4),
    ("diamond", 4, 5),
    ("K4", 4, 6),
    ("banner", 5, 5),
    ("K2,3", 5, 6),
    ("C5", 5, 5),
    ("P3+P1", 4, 2),
    ("3K1", 3, 0),
])
def test_sizes(name, vertices, edges):
    g = named_graph(name)
    assert (g.vertex_count, g.edge_count) == (vertices, edges)


def test_four_vertex_degree_sequences_differ():
    assert len({tuple(sorted(ng.graph.degrees())) for ng in catalogue()[:11]}) == 11


def test_unknown_name():
    with pytest.raises(UnknownName):
        named_graph("K5")
