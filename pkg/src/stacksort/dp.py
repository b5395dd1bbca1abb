"""Forward dynamic program counting t-stack-sortable permutations ending in 0.

A state summarises every (shape, linear extension) pair with ``m`` cells
that agree on

* ``w``      -- the width (longest row),
* ``w_last`` -- the length of the last row,
* ``h``      -- ``h[j-1]`` is the hook length of cell ``(j + 1, last row)``,
* ``p``      -- ``p[j-1]`` is the label of the lowest cell of column ``j``.

A transition appends a row of length ``i <= t``. Labels are final labels in
``[m + i]``: the new cells are slotted into the existing order and every old
label moves up by the number of new labels that land below it. The count
stored for a state is the number of primed permutations whose tableau falls
in it, so the final layer sums to the number of t-sortable ones.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from math import prod
from typing import Iterator, NamedTuple

from .hooks import comp_upof, hook_length
from .tableau import Cell, Composition

log = logging.getLogger(__name__)

__all__ = [
    "StateGuardExceeded",
    "DPState",
    "INITIAL_STATE",
    "extend_hooks",
    "enumerate_positions",
    "gap_positions",
    "successors",
    "state_of",
    "count_layers",
    "count_table",
    "count_sortable",
    "count_table_reference",
]


class StateGuardExceeded(RuntimeError):
    pass


class DPState(NamedTuple):
    m: int
    w: int
    w_last: int
    h: tuple[int, ...]
    p: tuple[int, ...]


INITIAL_STATE = DPState(0, 0, 0, (), ())


def extend_hooks(s: DPState, i: int) -> tuple[int, ...]:
    """Hook vector of the last row after appending a row of length ``i``."""
    if i < 1:
        raise ValueError(f"row length must be positive, got {i}")
    out = []
    for j in range(1, max(s.w, i) + 1):
        if j <= s.w_last:
            out.append(min(j, i))
        elif j <= s.w:
            out.append(s.h[j - 1] + min(j, i))
        else:
            out.append(s.m + j)
    return tuple(out)


def _shift(p: tuple[int, ...], x: int, i: int) -> int:
    """Number of new labels ``p`` sitting below old label ``x``."""
    return sum(1 for k, q in enumerate(p[:i], start=1) if q <= x + i - k)


def enumerate_positions(s: DPState, i: int) -> set[tuple[int, ...]]:
    """All label tuples for a new row of length ``i``, straight from the constraints.

    The first ``i`` entries are searched in decreasing order; entries for
    old columns beyond ``i`` are forced and simply computed.
    """
    if i < 1:
        raise ValueError(f"row length must be positive, got {i}")
    m, w = s.m, s.w
    top = m + i
    found: set[tuple[int, ...]] = set()
    chosen: list[int] = []

    def rec(k: int, below: int) -> None:
        if k > i:
            cand = tuple(chosen)
            for j in range(1, min(w, i) + 1):
                if not cand[j - 1] < s.p[j - 1] + _shift(cand, s.p[j - 1], i):
                    return
            tail = tuple(s.p[j - 1] + _shift(cand, s.p[j - 1], i) for j in range(i + 1, w + 1))
            found.add(cand + tail)
            return
        # never more than i new labels below an old one
        hi = below - 1
        if k <= w:
            hi = min(hi, s.p[k - 1] + i - 1)
        for q in range(hi, i - k, -1):
            chosen.append(q)
            rec(k + 1, q)
            chosen.pop()

    rec(1, top + 1)
    return found


def gap_positions(s: DPState, i: int) -> Iterator[tuple[int, ...]]:
    """Same set as :func:`enumerate_positions`, generated by gaps.

    ``g[k]`` counts old labels below new cell ``k``: the gaps weakly decrease
    along the row and cell ``k`` must sit below the old bottom of column
    ``k``, i.e. ``g[k] < p[k]``.
    """
    m, w = s.m, s.w
    gaps: list[int] = []

    def rec(k: int, bound: int) -> Iterator[tuple[int, ...]]:
        if k > i:
            new = tuple(g + i - k + 1 for k, g in enumerate(gaps, start=1))
            tail = tuple(s.p[j - 1] + sum(1 for g in gaps if g < s.p[j - 1])
                         for j in range(i + 1, w + 1))
            yield new + tail
            return
        if k <= w:
            bound = min(bound, s.p[k - 1] - 1)
        for g in range(bound, -1, -1):
            gaps.append(g)
            yield from rec(k + 1, g)
            gaps.pop()

    yield from rec(1, m)


def successors(s: DPState, t: int) -> list[tuple[DPState, int]]:
    """Successor states with their multipliers (hooks of the new row's cells)."""
    out = []
    for i in range(1, t + 1):
        h = extend_hooks(s, i)
        mult = prod(h[: i - 1])
        w = max(s.w, i)
        for p in sorted(enumerate_positions(s, i), reverse=True):
            out.append((DPState(s.m + i, w, i, h, p), mult))
    return out


def state_of(alpha: Composition, to_cell: dict[int, Cell]) -> DPState:
    """The state a given (shape, linear extension) pair belongs to."""
    from_cell = {c: v for v, c in to_cell.items()}
    ell = len(alpha)
    w = max(alpha, default=0)
    h = tuple(hook_length(alpha, j + 1, ell) for j in range(1, w + 1))
    p = tuple(from_cell[comp_upof(alpha, j, ell + 1)] for j in range(1, w + 1))
    return DPState(sum(alpha), w, alpha[-1] if alpha else 0, h, p)


def _row_append(layer: dict, m: int, i: int, out: dict) -> None:
    """Append a row of length ``i`` to every state of layer ``m``.

    The row's cells are placed one at a time so states that differ only in
    an already consumed old label merge before the next cell is chosen.
    Keys during the sweep are ``(w, h, new, rest, tail)`` where ``new`` holds
    the labels fixed so far, ``rest`` the old bottoms still constraining
    upcoming cells and ``tail`` the old bottoms of columns past ``i``
    together with their final label once known (0 while pending).
    """
    stage: dict = defaultdict(int)
    for (w, w_last, h, p), count in layer.items():
        hi = extend_hooks(DPState(m, w, w_last, h, p), i)
        key = (max(w, i), hi, (), p[:i], tuple((x, 0) for x in p[i:]))
        stage[key] += count * prod(hi[: i - 1])

    for k in range(1, i + 1):
        nxt: dict = defaultdict(int)
        lift = i - k + 1
        for (w, hi, new, rest, tail), count in stage.items():
            bound = new[-1] - lift - 1 if new else m
            if rest:
                bound = min(bound, rest[0] - 1)
                rest = rest[1:]
            for g in range(bound, -1, -1):
                new_tail = tuple((x, x + lift) if not done and g < x else (x, done)
                                 for x, done in tail)
                nxt[(w, hi, new + (g + lift,), rest, new_tail)] += count
        stage = nxt

    for (w, hi, new, _, tail), count in stage.items():
        p = new + tuple(done or x for x, done in tail)
        out[(w, i, hi, p)] += count


def count_layers(n_max: int, t: int, max_states: int | None = None) -> Iterator[tuple[int, dict]]:
    """Yield ``(m, layer)`` for ``m = 0..n_max``; a layer maps state keys to counts.

    Keys are ``(w, w_last, h, p)``. Only reachable states are stored and a
    layer is discarded once its row appends have been pushed forward.
    ``max_states`` bounds the size of any single layer.
    """
    if n_max < 0 or t < 0:
        raise ValueError("n_max and t must be non-negative")
    pending: dict[int, dict] = defaultdict(lambda: defaultdict(int))
    pending[0][(0, 0, (), ())] = 1
    for m in range(n_max + 1):
        layer = pending.pop(m, {})
        log.debug("layer m=%d: %d states", m, len(layer))
        if max_states is not None and len(layer) > max_states:
            raise StateGuardExceeded(f"layer {m} has {len(layer)} states, guard is {max_states}")
        yield m, layer
        for i in range(1, min(t, n_max - m) + 1):
            _row_append(layer, m, i, pending[m + i])


def count_table(n_max: int, t: int, max_states: int | None = None) -> list[tuple[int, int]]:
    """``[(n, count_sortable(n, t)) for n in 1..n_max]`` from one sweep."""
    return [(m, sum(layer.values())) for m, layer in count_layers(n_max, t, max_states) if m >= 1]


def count_sortable(n: int, t: int, max_states: int | None = None) -> int:
    """Number of permutations of size ``n`` ending in 0 sortable by ``t`` passes.

    >>> count_sortable(5, 2)
    21
    """
    if n < 0 or t < 0:
        raise ValueError("n and t must be non-negative")
    for m, layer in count_layers(n, t, max_states):
        if m == n:
            return sum(layer.values())
    raise AssertionError("unreachable")


def count_table_reference(n_max: int, t: int) -> list[tuple[int, int]]:
    """Slow sweep built directly on :func:`successors`; for cross-checking."""
    layers: dict[int, dict[DPState, int]] = defaultdict(lambda: defaultdict(int))
    layers[0][INITIAL_STATE] = 1
    out = []
    for m in range(n_max + 1):
        layer = layers.pop(m, {})
        if m >= 1:
            out.append((m, sum(layer.values())))
        for s, count in layer.items():
            for nxt, mult in successors(s, t):
                if nxt.m <= n_max:
                    layers[nxt.m][nxt] += count * mult
    return out
