"""Compositions, composition diagrams and stack-sorting tableaux.

A composition is a tuple of positive row lengths, top row first. A cell is
a ``(col, row)`` pair with both coordinates 1-based, so the diagram of
``alpha`` is ``{(i, j) : i <= alpha[j - 1]}``. Cell ``(1, 1)`` dominates
every other cell and always carries the largest label of a tableau.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence

from .perm import InvalidPermutation, Perm, as_perm, is_primed, iterates

__all__ = [
    "Cell",
    "Composition",
    "compositions",
    "width",
    "cells",
    "drop_last_row",
    "append_row",
    "remove_cell",
    "dominates",
    "is_linear_extension",
    "column_blocks",
    "StackSortingTableau",
    "build_tableau",
]

Cell = tuple[int, int]
Composition = tuple[int, ...]


def compositions(n: int) -> Iterator[Composition]:
    """All compositions of ``n`` (one for ``n = 0``: the empty tuple)."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first, *rest)


def as_composition(parts: Sequence[int]) -> Composition:
    parts = tuple(int(x) for x in parts)
    if any(x < 1 for x in parts):
        raise ValueError(f"composition parts must be positive: {parts}")
    return parts


def width(alpha: Composition) -> int:
    return max(alpha, default=0)


def cells(alpha: Composition) -> list[Cell]:
    """Cells of the diagram, row by row."""
    return [(i, j) for j, a in enumerate(alpha, start=1) for i in range(1, a + 1)]


def drop_last_row(alpha: Composition) -> Composition:
    return alpha[:-1]


def append_row(alpha: Composition, i: int) -> Composition:
    return (*alpha, i)


def remove_cell(alpha: Composition, j: int) -> Composition:
    """Shorten row ``j`` (1-based) by one cell; the row must keep a cell."""
    if alpha[j - 1] <= 1:
        raise ValueError(f"row {j} of {alpha} has a single cell")
    return alpha[: j - 1] + (alpha[j - 1] - 1,) + alpha[j:]


def dominates(a: Cell, b: Cell) -> bool:
    """``a >= b`` in the diagram order: weakly left of and weakly above."""
    return a[0] <= b[0] and a[1] <= b[1]


def is_linear_extension(alpha: Composition, to_cell: Mapping[int, Cell]) -> bool:
    """Check that ``to_cell`` is a bijection from labels ``1..n`` onto the cells of ``alpha`` respecting order.

    Malformed mappings give ``False`` rather than raising.
    """
    n = sum(alpha)
    try:
        if set(to_cell) != set(range(1, n + 1)):
            return False
        image = {tuple(c) for c in to_cell.values()}
    except TypeError:
        return False
    if image != set(cells(alpha)) or len(image) != n:
        return False
    # Checking left and upper neighbours suffices: every dominance relation
    # in the diagram is a chain of such steps through cells of the diagram.
    label = {tuple(c): v for v, c in to_cell.items()}
    for (i, j), v in label.items():
        if i > 1 and label[(i - 1, j)] < v:
            return False
        above = [jj for jj in range(j - 1, 0, -1) if alpha[jj - 1] >= i]
        if above and label[(i, above[0])] < v:
            return False
    return True


def column_blocks(p: Sequence[int], i: int) -> tuple[Perm, tuple[Perm, ...]]:
    """Column values and blocks of the ``(i-1)``-th iterate of a primed ``p``.

    The columns are the right-to-left maxima of the part before 0, read
    left to right; block ``k`` is the segment just before column ``k``.
    """
    p = as_perm(p)
    if not is_primed(p):
        raise InvalidPermutation(f"not a permutation ending in 0: {p}")
    its = iterates(p)
    depth = len(its) - 1
    if not 1 <= i <= depth:
        raise IndexError(f"iterate index {i} outside 1..{depth}")
    return _split_columns(its[i - 1])


def _split_columns(q: Perm) -> tuple[Perm, tuple[Perm, ...]]:
    prefix = q[: q.index(0)]
    columns: list[int] = []
    blocks: list[Perm] = []
    start = 0
    while start < len(prefix):
        rest = prefix[start:]
        top = max(rest)
        k = start + rest.index(top)
        blocks.append(prefix[start:k])
        columns.append(top)
        start = k + 1
    return tuple(columns), tuple(blocks)


@dataclass(frozen=True)
class StackSortingTableau:
    shape: Composition
    to_cell: dict[int, Cell]
    from_cell: dict[Cell, int] = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "from_cell", {c: v for v, c in self.to_cell.items()})

    @property
    def n(self) -> int:
        return sum(self.shape)

    def rows(self) -> list[list[int]]:
        """Labels row by row, left to right (English notation)."""
        return [[self.from_cell[(i, j)] for i in range(1, a + 1)]
                for j, a in enumerate(self.shape, start=1)]

    def render(self) -> str:
        rows = self.rows()
        pad = max((len(str(v)) for r in rows for v in r), default=1)
        return "\n".join(" ".join(str(v).rjust(pad) for v in r) for r in rows)

    def to_json(self) -> str:
        return json.dumps({
            "shape": list(self.shape),
            "cells": {str(v): list(c) for v, c in sorted(self.to_cell.items())},
        })

    @classmethod
    def from_json(cls, text: str) -> StackSortingTableau:
        data = json.loads(text)
        return cls(tuple(data["shape"]),
                   {int(v): (int(c[0]), int(c[1])) for v, c in data["cells"].items()})


def build_tableau(p: Sequence[int]) -> StackSortingTableau:
    """Stack-sorting tableau of a permutation ending in 0.

    Every value ``v`` is a column value of exactly one iterate; that
    iterate's index is its column and it inherits its row from the column
    value whose block it tops in the previous iterate.

    >>> build_tableau((2, 1, 0)).rows()
    [[2], [1]]
    """
    p = as_perm(p)
    if not is_primed(p):
        raise InvalidPermutation(f"not a permutation ending in 0: {p}")
    its = iterates(p)
    row: dict[int, int] = {}
    col: dict[int, int] = {}
    prev: tuple[Perm, tuple[Perm, ...]] | None = None
    n_rows = 0
    for i, q in enumerate(its[:-1], start=1):
        columns, blocks = _split_columns(q)
        if prev is None:
            n_rows = len(columns)
            for k, c in enumerate(columns, start=1):
                row[c] = k
        else:
            # c is the maximum of exactly one previous block; inherit that row
            topped = {max(b): c for c, b in zip(*prev) if b}
            for c in columns:
                row[c] = row[topped[c]]
        for c in columns:
            col[c] = i
        prev = (columns, blocks)
    n = len(p) - 1
    shape = [0] * n_rows
    for v in range(1, n + 1):
        shape[row[v] - 1] += 1
    return StackSortingTableau(tuple(shape), {v: (col[v], row[v]) for v in range(1, n + 1)})
