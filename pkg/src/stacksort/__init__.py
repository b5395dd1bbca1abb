"""Stack-sorting tableaux and exact counts of t-stack-sortable permutations."""

from .dp import count_sortable, count_table
from .hooks import count_for_composition, count_for_tableau, hook_length, hook_product
from .perm import iterates, sort_depth, stack_sort
from .tableau import StackSortingTableau, build_tableau, column_blocks

__version__ = "0.1.0"

__all__ = [
    "stack_sort",
    "iterates",
    "sort_depth",
    "column_blocks",
    "build_tableau",
    "StackSortingTableau",
    "hook_length",
    "hook_product",
    "count_for_tableau",
    "count_for_composition",
    "count_sortable",
    "count_table",
]
