"""Exact character theory of the symmetric groups S_n.

Partitions are passed as sequences of positive integers in any order, or as
text such as "5,1^3". Character values, orders and counts come back as
Python ints.
"""

from ._symchar import (
    __version__,
    partitions_of,
    parse_partition,
    centralizer_order,
    class_size,
    conjugate,
    is_hook,
    dominance_compare,
    mn_char,
    degree,
    sign_value,
    border_strip_removals,
    character_table,
    character_table_json,
    near_hook_value,
    induced_value,
    hook_char_recursive,
    two_row_char_recursive,
    structure_constant,
    structure_constant_bruteforce,
    predicted_coefficient,
    merge_lemma_check,
    vanishing_set,
    covers_all_nonlinear,
    find_covering_pairs,
    k_of_Sn,
    verify_main_theorem,
)

__all__ = [name for name in dir() if not name.startswith("_")]
