"""Target high-utility itemset mining with utility-lists and serial-number matching."""

__version__ = "0.1.0"

from .model import (
    DatabaseFormatError,
    ItemIndex,
    QuantitativeDatabase,
    Transaction,
    build_index,
    compute_twu,
    itemset_utility,
    parse_database,
    read_database,
    serialize_database,
    validate_target,
)
from .ulist import UtilityList, build_initial_ulists, construct
from .miner import Decision, MiningOutcome, TargetPattern, match_step, mine, search
from .oracle import brute_force_thuis, mine_then_filter
from .datagen import GenParams, generate
