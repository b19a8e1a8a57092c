from .graph_base import (
    Graph,
    Partition,
    VertexSet,
    anticomponents,
    build_graph,
    complement,
    components,
    disjoint_union,
    empty_graph,
    is_connected,
    join,
    substitute,
)
from .graph_induced import find_induced_c5, find_induced_copy, is_h_free, verify_induced_copy
from .graph_chordal import chordal_elimination_order, is_chordal, split_partition
from .graph_blowup import is_c5_blowup, maximal_c5_blowup
from .graph_io import format_graph, parse_graph, read_graph, write_graph
