import random
from pathlib import Path

import pytest

from recoloureur.colouring.colouring_base import Colouring, free_colours
from recoloureur.colouring.colouring_chromatic import chromatic_number_exact
from recoloureur.graph.graph_io import read_graph

GRAPHS = Path(__file__).parent / "graph"


def sample_proper(g, palette, rng, walk=None):
    """
    An optimal colouring spread over the palette, then shaken by a random
    walk of single-vertex recolourings.
    """
    n = g.vertex_count
    if n == 0:
        return Colouring((), palette)
    chi, base = chromatic_number_exact(g)
    mapping = rng.sample(range(1, palette + 1), chi)
    colours = [mapping[c - 1] for c in base.colours]
    for _ in range(walk if walk is not None else 4 * n):
        v = rng.randrange(n)
        options = free_colours(g, colours, v, range(1, palette + 1))
        if options:
            colours[v] = rng.choice(options)
    return Colouring(tuple(colours), palette)


@pytest.fixture
def sampler():
    return sample_proper


@pytest.fixture
def rng():
    return random.Random(2024)


@pytest.fixture
def graph_file():
    return lambda name: read_graph(GRAPHS / name)
