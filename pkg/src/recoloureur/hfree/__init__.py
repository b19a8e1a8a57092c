from .hfree_catalogue import FIVE_VERTEX_NAMES, FOUR_VERTEX_NAMES, NamedGraph, catalogue, named_graph, patterns
