"""Hook lengths, linear extensions and counting per tableau or shape.

Row 0 is used as a sentinel meaning "no cell above"; a window starting at
row 0 starts at the beginning of the sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate
from math import prod
from typing import Iterator, Mapping, Sequence

from .perm import as_perm, iterates
from .tableau import Cell, Composition, StackSortingTableau, cells, is_linear_extension

__all__ = [
    "ExtensionGuardExceeded",
    "DEFAULT_EXTENSION_GUARD",
    "comp_upof",
    "hook_length",
    "hook_length_by_definition",
    "HookTable",
    "hook_table",
    "hook_product",
    "iter_linear_extensions",
    "linear_extensions",
    "count_for_tableau",
    "count_for_composition",
    "window",
    "tableau_membership",
]

DEFAULT_EXTENSION_GUARD = 12


class ExtensionGuardExceeded(RuntimeError):
    pass


def _part(alpha: Composition, j: int) -> int:
    return alpha[j - 1] if 1 <= j <= len(alpha) else 0


def comp_upof(alpha: Composition, i: int, j: int) -> Cell:
    """Nearest cell of column ``i`` strictly above row ``j``, else ``(i, 0)``."""
    for jj in range(min(j - 1, len(alpha)), 0, -1):
        if alpha[jj - 1] >= i:
            return (i, jj)
    return (i, 0)


def hook_length(alpha: Composition, i: int, j: int) -> int:
    """Hook length of ``(i, j)``; defined for any positive pair, not only cells.

    The rows strictly between the upper neighbour of ``(i - 1, j)`` and row
    ``j`` are all shorter than ``i - 1`` and so are counted whole.
    """
    if i == 1:
        return 1
    top = comp_upof(alpha, i - 1, j)[1]
    prefix = _prefix_sums(alpha)
    between = prefix[min(j - 1, len(alpha))] - prefix[min(top, len(alpha))]
    return between + min(i - 1, _part(alpha, j))


@lru_cache(maxsize=4096)
def _prefix_sums(alpha: Composition) -> tuple[int, ...]:
    return (0, *accumulate(alpha))


def hook_length_by_definition(alpha: Composition, i: int, j: int) -> int:
    """Hook length by direct cell count (reference for :func:`hook_length`)."""
    if i == 1:
        return 1
    top = comp_upof(alpha, i - 1, j)[1]
    return sum(1 for (a, b) in cells(alpha) if a <= i - 1 and top < b <= j)


@dataclass(frozen=True)
class HookTable:
    shape: Composition
    hooks: dict[Cell, int]

    def rows(self) -> list[list[int]]:
        return [[self.hooks[(i, j)] for i in range(1, a + 1)]
                for j, a in enumerate(self.shape, start=1)]


def hook_table(alpha: Composition) -> HookTable:
    return HookTable(alpha, {c: hook_length(alpha, *c) for c in cells(alpha)})


def hook_product(alpha: Composition) -> int:
    return prod(hook_length(alpha, i, j) for i, j in cells(alpha))


def _check_guard(alpha: Composition, guard: int | None) -> None:
    if guard is not None and sum(alpha) > guard:
        raise ExtensionGuardExceeded(
            f"shape {alpha} has {sum(alpha)} cells, guard is {guard}")


def _covers(alpha: Composition) -> dict[Cell, list[Cell]]:
    """Map each cell to the cells immediately right of and below it."""
    below: dict[Cell, list[Cell]] = {c: [] for c in cells(alpha)}
    for (i, j) in below:
        if (i + 1, j) in below:
            below[(i, j)].append((i + 1, j))
        for jj in range(j + 1, len(alpha) + 1):
            if alpha[jj - 1] >= i:
                below[(i, j)].append((i, jj))
                break
    return below


def iter_linear_extensions(alpha: Composition,
                           guard: int | None = DEFAULT_EXTENSION_GUARD) -> Iterator[dict[int, Cell]]:
    """Yield every linear extension of the diagram of ``alpha`` as a label -> cell map.

    Labels are handed out upward from 1; each step places the next label
    on a cell all of whose lower neighbours are already labelled.
    """
    _check_guard(alpha, guard)
    below = _covers(alpha)
    above: dict[Cell, list[Cell]] = {c: [] for c in below}
    for c, ds in below.items():
        for d in ds:
            above[d].append(c)
    missing = {c: len(ds) for c, ds in below.items()}
    n = len(below)
    labels: dict[int, Cell] = {}

    def rec(k: int, ready: list[Cell]) -> Iterator[dict[int, Cell]]:
        if k > n:
            yield dict(labels)
            return
        for idx, c in enumerate(ready):
            labels[k] = c
            rest = ready[:idx] + ready[idx + 1:]
            for u in above[c]:
                missing[u] -= 1
                if missing[u] == 0:
                    rest.append(u)
            yield from rec(k + 1, rest)
            for u in above[c]:
                missing[u] += 1
            del labels[k]

    yield from rec(1, [c for c, m in missing.items() if m == 0])


def linear_extensions(alpha: Composition, guard: int | None = DEFAULT_EXTENSION_GUARD) -> int:
    """Number of linear extensions of the diagram of ``alpha``."""
    _check_guard(alpha, guard)
    below = _covers(alpha)
    universe = frozenset(below)

    @lru_cache(maxsize=None)
    def count(placed: frozenset[Cell]) -> int:
        if placed == universe:
            return 1
        return sum(count(placed | {c}) for c in universe - placed
                   if all(d in placed for d in below[c]))

    return count(frozenset())


def count_for_tableau(alpha: Composition, to_cell: Mapping[int, Cell] | StackSortingTableau) -> int:
    """Number of primed permutations whose tableau is exactly ``to_cell``."""
    if isinstance(to_cell, StackSortingTableau):
        to_cell = to_cell.to_cell
    if not is_linear_extension(alpha, to_cell):
        raise ValueError(f"not a linear extension of {alpha}")
    return hook_product(alpha)


def count_for_composition(alpha: Composition, guard: int | None = DEFAULT_EXTENSION_GUARD) -> int:
    """Number of primed permutations whose tableau has shape ``alpha``."""
    return linear_extensions(alpha, guard) * hook_product(alpha)


def _window_bounds(alpha: Composition, i: int, j: int, k: int) -> int:
    if not (1 <= j <= len(alpha) and 1 <= i <= alpha[j - 1] and 1 <= k < i):
        raise ValueError(f"need (i, j) = ({i}, {j}) in the diagram of {alpha} and 1 <= k = {k} < i")
    return comp_upof(alpha, i - 1, j)[1]


def window(p: Sequence[int], alpha: Composition, to_cell: Mapping[int, Cell] | StackSortingTableau,
           i: int, j: int, k: int) -> tuple[int, ...]:
    """Segment of the ``(k-1)``-th iterate ending at the label of ``(k, j)``.

    It starts right after the label of ``(k, j')`` where ``j'`` is the row
    of the upper neighbour of ``(i - 1, j)``, or at the start if ``j' = 0``.
    """
    from_cell = _from_cell(to_cell)
    top = _window_bounds(alpha, i, j, k)
    its = iterates(p)
    q = its[min(k - 1, len(its) - 1)]
    end = q.index(from_cell[(k, j)]) + 1
    start = q.index(from_cell[(k, top)]) + 1 if top > 0 else 0
    return q[start:end]


def _from_cell(to_cell: Mapping[int, Cell] | StackSortingTableau) -> dict[Cell, int]:
    if isinstance(to_cell, StackSortingTableau):
        return to_cell.from_cell
    return {tuple(c): v for v, c in to_cell.items()}


def tableau_membership(p: Sequence[int], alpha: Composition,
                       to_cell: Mapping[int, Cell] | StackSortingTableau) -> bool:
    """Decide whether ``to_cell`` is the tableau of ``p`` by reading ``p`` alone.

    The first column must appear in ``p`` top to bottom, and every other
    label must lie in its window of ``p`` itself.
    """
    p = as_perm(p)
    from_cell = _from_cell(to_cell)
    if len(p) != sum(alpha) + 1:
        return False
    pos = {v: x for x, v in enumerate(p)}
    first = [pos[from_cell[(1, j)]] for j in range(1, len(alpha) + 1)]
    if any(a >= b for a, b in zip(first, first[1:])):
        return False
    for (i, j) in cells(alpha):
        if i == 1:
            continue
        top = comp_upof(alpha, i - 1, j)[1]
        lo = pos[from_cell[(1, top)]] if top > 0 else -1
        hi = pos[from_cell[(1, j)]]
        if not lo < pos[from_cell[(i, j)]] <= hi:
            return False
    return True
