from .colouring_base import (
    ColourClasses,
    Colouring,
    class_partition,
    colour_classes,
    free_colours,
    is_frozen,
    is_proper,
    same_partition,
)
from .colouring_chromatic import (
    chi_3k1_free,
    chi_p3_free,
    chromatic_number_exact,
    clique_number,
    is_k_colourable,
    max_clique,
)
from .colouring_io import format_colouring, parse_colouring, read_colouring, write_colouring
