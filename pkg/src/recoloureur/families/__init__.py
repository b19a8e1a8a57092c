from .families_basic import FAMILY_NAMES, FamilySpec, complete_graph, cycle_graph, gen_basic, path_graph
from .families_witness import WitnessBundle, gen_bp, gen_gp, pendant_extension
from .families_random import gen_random_in_class
