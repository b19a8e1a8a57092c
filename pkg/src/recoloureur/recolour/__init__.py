from .recolour_path import (
    PathBuilder,
    RecolourPath,
    RecolourStep,
    Validation,
    apply_and_validate,
    concat_paths,
    format_path,
    parse_path,
    read_path,
    reverse_path,
    write_path,
)
from .recolour_renaming import renaming_path
from .recolour_3k1 import recolour_3k1
from .recolour_p3p1 import p3p1_chromatic_number, recolour_p3p1
from .recolour_2k2c4 import recolour_2k2c4
from .recolour_chordal import recolour_chordal
from .recolour_p5c4 import blowup_decomposition, lift_over_tight_component, p5c4_chromatic_number, recolour_p5c4, recolour_tight_component
from .recolour_renaming import RecolourRenaming
from .recolour_p3p1 import RecolourP3P1
from .recolour_2k2c4 import Recolour2K2C4
from .recolour_chordal import RecolourChordal
from .recolour_p5c4 import RecolourP5C4
