"""Query-counted recognition of bounded-depth balanced parentheses, with
grid-connectivity reductions and AND-OR formula construction."""

from .costmodel import CostTables, ladder_rungs, make_cost_tables
from .dyck import decide_dyck, padded_word
from .oracle import Backend, CostModel, ExecutionContext, repetition_factor
from .search import amplified_first_success, max_param_search, threshold_search
from .substring import (
    Direction,
    SearchParams,
    find_any,
    find_first,
    find_fixed_len,
    find_fixed_pos,
    find_from,
    find_from_right,
)
from .words import (
    BOTH_SIGNS,
    PaddedWord,
    SubstringMatch,
    Word,
    balance,
    minimal_substrings_by_depth,
    oracle_dyck,
    oracle_minimal_substrings,
    prefix_balances,
    prefix_height,
    prefix_min,
    reverse_complement,
)

__all__ = [
    "Backend",
    "BOTH_SIGNS",
    "CostModel",
    "CostTables",
    "Direction",
    "ExecutionContext",
    "PaddedWord",
    "SearchParams",
    "SubstringMatch",
    "Word",
    "amplified_first_success",
    "balance",
    "decide_dyck",
    "find_any",
    "find_first",
    "find_fixed_len",
    "find_fixed_pos",
    "find_from",
    "find_from_right",
    "ladder_rungs",
    "make_cost_tables",
    "max_param_search",
    "minimal_substrings_by_depth",
    "oracle_dyck",
    "oracle_minimal_substrings",
    "padded_word",
    "prefix_balances",
    "prefix_height",
    "prefix_min",
    "repetition_factor",
    "reverse_complement",
    "threshold_search",
]
