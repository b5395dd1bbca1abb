"""West's stack-sorting map and small sequence utilities.

Sequences are plain tuples of distinct non-negative integers. Nothing here
requires the values to be contiguous, so filtered prefixes such as
``(9, 3, 5)`` can be sorted directly.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

__all__ = [
    "InvalidPermutation",
    "as_perm",
    "parse_perm",
    "format_perm",
    "is_primed",
    "stack_sort",
    "iterates",
    "is_sorted",
    "sort_depth",
    "standardize",
    "filter_ge",
    "prefix_filter",
    "sort_depth_decomposed",
]

Perm = tuple[int, ...]


class InvalidPermutation(ValueError):
    pass


def as_perm(entries: Iterable[int]) -> Perm:
    p = tuple(int(x) for x in entries)
    if len(set(p)) != len(p):
        raise InvalidPermutation(f"entries are not distinct: {p}")
    if any(x < 0 for x in p):
        raise InvalidPermutation(f"entries must be non-negative: {p}")
    return p


def parse_perm(text: str) -> Perm:
    """Parse whitespace- or comma-separated decimal integers."""
    tokens = [tok for tok in re.split(r"[\s,]+", text.strip()) if tok]
    try:
        values = [int(tok) for tok in tokens]
    except ValueError as exc:
        raise InvalidPermutation(f"cannot parse permutation {text!r}") from exc
    return as_perm(values)


def format_perm(p: Sequence[int]) -> str:
    return " ".join(str(x) for x in p)


def is_primed(p: Sequence[int]) -> bool:
    """True if ``p`` is a permutation of ``{0, ..., n}`` ending in 0."""
    return len(p) >= 1 and p[-1] == 0 and sorted(p) == list(range(len(p)))


def stack_sort(p: Sequence[int]) -> Perm:
    """One pass of the stack-sorting map.

    The stack stays increasing from top to bottom: an entry is pushed while
    it is smaller than the top, otherwise the top is popped to the output.

    >>> stack_sort((1, 3, 2, 4))
    (1, 2, 3, 4)
    """
    return _sort_pass(as_perm(p))


def _sort_pass(p: Perm) -> Perm:
    out: list[int] = []
    stack: list[int] = []
    for x in p:
        while stack and stack[-1] < x:
            out.append(stack.pop())
        stack.append(x)
    out.extend(reversed(stack))
    return tuple(out)


def is_sorted(p: Sequence[int]) -> bool:
    return all(a < b for a, b in zip(p, p[1:]))


def iterates(p: Sequence[int]) -> list[Perm]:
    """``[p, s(p), s(s(p)), ...]`` up to and including the first sorted one."""
    cur = as_perm(p)
    out = [cur]
    while not is_sorted(cur):
        cur = _sort_pass(cur)
        out.append(cur)
    return out


def sort_depth(p: Sequence[int]) -> int:
    """Least ``k`` such that ``k`` passes of the map leave ``p`` sorted."""
    return len(iterates(p)) - 1


def standardize(p: Sequence[int]) -> Perm:
    rank = {v: r for r, v in enumerate(sorted(p))}
    return tuple(rank[v] for v in p)


def filter_ge(p: Sequence[int], m: int) -> Perm:
    return tuple(x for x in p if x >= m)


def prefix_filter(p: Sequence[int], i: int) -> Perm:
    """First ``i`` entries of ``p`` with everything below the ``i``-th removed.

    ``i`` is 1-based. The result always ends in its own minimum.
    """
    if not 1 <= i <= len(p):
        raise IndexError(f"prefix index {i} outside 1..{len(p)}")
    return filter_ge(p[:i], p[i - 1])


def sort_depth_decomposed(p: Sequence[int]) -> int:
    """Sort depth computed as the maximum over all filtered prefixes."""
    p = as_perm(p)
    return max((sort_depth(prefix_filter(p, i)) for i in range(1, len(p) + 1)), default=0)
