from .oracle_states import check_budget, decode, encode, enumerate_proper, proper_keys, state_space_size
from .oracle_mixing import (
    INFINITE,
    MixingReport,
    ReconfigurationSpace,
    frozen_colourings,
    mixing_report,
    oracle_distance,
    oracle_path,
)
