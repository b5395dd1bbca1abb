"""Brute-force checks over all small permutations.

Nothing in here touches the dynamic program: counts come from running the
stack-sorting map on every permutation, and structural facts are checked
one permutation at a time.
"""

from __future__ import annotations

import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import permutations, repeat
from math import comb
from typing import Callable, Iterable, Iterator, Sequence

from .hooks import (comp_upof, count_for_composition, hook_length, hook_length_by_definition,
                    hook_product, iter_linear_extensions, tableau_membership, window)
from .perm import (Perm, filter_ge, is_sorted, iterates, prefix_filter, sort_depth,
                   sort_depth_decomposed, stack_sort, standardize)
from .tableau import (Composition, StackSortingTableau, _split_columns, build_tableau, cells,
                      compositions, is_linear_extension, width)

__all__ = [
    "OracleGuardExceeded",
    "DEFAULT_ORACLE_GUARD",
    "primed_permutations",
    "brute_count",
    "depth_histogram",
    "CensusEntry",
    "tableau_census",
    "PropertyResult",
    "check_primed",
    "check_unprimed",
    "SUITES",
    "verify_lemmas",
    "report_json",
    "catalan",
    "zeilberger",
    "motzkin",
    "classic_counts",
    "motzkin_report",
]

DEFAULT_ORACLE_GUARD = 9


class OracleGuardExceeded(RuntimeError):
    pass


def _guard(n: int, guard: int | None) -> None:
    if guard is not None and n > guard:
        raise OracleGuardExceeded(f"n = {n} exceeds the oracle guard {guard}")


def primed_permutations(n: int) -> Iterator[Perm]:
    """All permutations of ``1..n`` with 0 appended, in lexicographic order."""
    for q in permutations(range(1, n + 1)):
        yield q + (0,)


def _histogram_with_first(n: int, primed: bool, first: int) -> Counter:
    rest = [x for x in range(1, n + 1) if x != first]
    tail = (0,) if primed else ()
    return Counter(sort_depth((first, *q, *tail)) for q in permutations(rest))


def depth_histogram(n: int, primed: bool = True, guard: int | None = DEFAULT_ORACLE_GUARD,
                    workers: int = 1) -> Counter:
    """Sort depth -> number of permutations, over ``S_n'`` or ``S_n``.

    With ``workers > 1`` the permutations are split by first entry across
    processes; the merged histogram is the same.
    """
    _guard(n, guard)
    if n == 0:
        return Counter({0: 1})
    firsts = range(1, n + 1)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_histogram_with_first, repeat(n), repeat(primed), firsts)
            return sum(parts, Counter())
    return sum((_histogram_with_first(n, primed, f) for f in firsts), Counter())


def brute_count(n: int, t: int, guard: int | None = DEFAULT_ORACLE_GUARD, workers: int = 1) -> int:
    """Count permutations in ``S_n'`` with sort depth at most ``t`` by simulation."""
    hist = depth_histogram(n, guard=guard, workers=workers)
    return sum(c for d, c in hist.items() if d <= t)


@dataclass
class CensusEntry:
    shape: Composition
    tableau: StackSortingTableau
    count: int


def tableau_census(n: int, guard: int | None = DEFAULT_ORACLE_GUARD) -> list[CensusEntry]:
    """Group ``S_n'`` by stack-sorting tableau."""
    _guard(n, guard)
    groups: dict = {}
    for p in primed_permutations(n):
        T = build_tableau(p)
        key = (T.shape, tuple(sorted(T.to_cell.items())))
        if key in groups:
            groups[key].count += 1
        else:
            groups[key] = CensusEntry(T.shape, T, 1)
    return sorted(groups.values(), key=lambda e: (e.shape, sorted(e.tableau.to_cell.items())))


@dataclass
class PropertyResult:
    property: str
    n: int
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _is_subsequence(small: Sequence[int], big: Sequence[int]) -> bool:
    it = iter(big)
    return all(x in it for x in small)


# --- structural facts about one permutation ending in 0 -------------------

def _blocks_and_columns(its: list[Perm]) -> list[tuple[Perm, tuple[Perm, ...]]]:
    return [_split_columns(q) for q in its[:-1]]


def _check_block_advance(p: Perm, its, split) -> bool:
    for i, (columns, blocks) in enumerate(split, start=1):
        prefix = its[i - 1][: its[i - 1].index(0)]
        if sum(((*b, c) for b, c in zip(blocks, columns)), ()) != prefix:
            return False
        if any(b and max(b) > c for b, c in zip(blocks, columns)):
            return False
        nxt = its[i][: its[i].index(0)]
        if sum((stack_sort(b) for b in blocks), ()) != nxt:
            return False
    return True


def _check_column_partition(p: Perm, its, split) -> bool:
    seen = [c for columns, _ in split for c in columns]
    return len(seen) == len(set(seen)) and set(seen) == set(range(1, len(p)))


def _check_column_subsequence(p: Perm, its, split) -> bool:
    for (_, prev_blocks), (columns, _) in zip(split, split[1:]):
        tops = [max(b) for b in prev_blocks if b]
        if not _is_subsequence(columns, tops):
            return False
    return True


def _check_row_monotone(p: Perm, its, split) -> bool:
    T = build_tableau(p)
    for columns, _ in split:
        rows = [T.to_cell[c][1] for c in columns]
        if any(a >= b for a, b in zip(rows, rows[1:])):
            return False
    return True


def _check_order_preserving(p: Perm, its, split) -> bool:
    T = build_tableau(p)
    n = len(p) - 1
    if set(T.to_cell.values()) != set(cells(T.shape)) or len(T.to_cell) != n:
        return False
    for a, ca in T.to_cell.items():
        for b, cb in T.to_cell.items():
            if ca[0] <= cb[0] and ca[1] <= cb[1] and a < b:
                return False
    return True


def _check_linear_extension(p: Perm, its, split) -> bool:
    T = build_tableau(p)
    return is_linear_extension(T.shape, T.to_cell)


def _check_width(p: Perm, its, split) -> bool:
    return width(build_tableau(p).shape) == len(its) - 1


def _check_window_monotone(p: Perm, its, split) -> bool:
    T = build_tableau(p)
    for (i, j) in cells(T.shape):
        if i == 1:
            continue
        first = set(window(p, T.shape, T, i, j, 1))
        for k in range(2, i):
            part = set(window(p, T.shape, T, i, j, k))
            if not part <= first:
                return False
            if any(T.to_cell[v][0] >= k for v in first - part):
                return False
    return True


def _check_membership_own(p: Perm, its, split) -> bool:
    T = build_tableau(p)
    return tableau_membership(p, T.shape, T)


def _check_cell_geometry(p: Perm, its, split) -> bool:
    # a value's left and upper neighbours in the diagram come from its column and block
    T = build_tableau(p)
    col_of = {c: (i, k) for i, (columns, _) in enumerate(split, start=1)
              for k, c in enumerate(columns, start=1)}
    for v, (i, j) in T.to_cell.items():
        ci, pos = col_of[v]
        if ci != i:
            return False
        if pos != sum(1 for jj in range(1, j) if T.shape[jj - 1] >= i) + 1:
            return False
        if pos > 1:
            up = split[i - 1][0][pos - 2]
            if T.to_cell[up] != comp_upof(T.shape, i, j):
                return False
    return True


PRIMED_CHECKS: dict[str, Callable] = {
    "block_advance": _check_block_advance,
    "column_partition": _check_column_partition,
    "column_subsequence": _check_column_subsequence,
    "row_monotone": _check_row_monotone,
    "order_preserving": _check_order_preserving,
    "tableau_bijection": _check_linear_extension,
    "width_equals_depth": _check_width,
    "cell_geometry": _check_cell_geometry,
    "window_monotone": _check_window_monotone,
    "membership_own_tableau": _check_membership_own,
}


def check_primed(p: Sequence[int]) -> dict[str, bool]:
    """Run every structural check on one permutation ending in 0."""
    p = tuple(p)
    its = iterates(p)
    split = _blocks_and_columns(its)
    return {name: check(p, its, split) for name, check in PRIMED_CHECKS.items()}


# --- facts about arbitrary permutations ------------------------------------

def _check_tail_sorted(p: Perm) -> bool:
    last = p[-1]
    q = p
    for _ in range(len(p)):
        tail = q[q.index(last) + 1:]
        if not is_sorted(tail) or any(x <= last for x in tail):
            return False
        q = stack_sort(q)
    return True


def _check_drop_last(p: Perm) -> bool:
    q, r = p, p[:-1]
    for _ in range(len(p)):
        if not _is_subsequence(r, q):
            return False
        q, r = stack_sort(q), stack_sort(r)
    return True


def _check_filter(p: Perm) -> bool:
    for m in p:
        q, r = p, filter_ge(p, m)
        for _ in range(len(p)):
            if not _is_subsequence(r, q):
                return False
            q, r = stack_sort(q), stack_sort(r)
    return True


def _check_reduction(p: Perm) -> bool:
    return sort_depth(p) == max(sort_depth(p[:-1]), sort_depth(filter_ge(p, p[-1])))


def _check_decomposition(p: Perm) -> bool:
    return sort_depth(p) == max(sort_depth(prefix_filter(p, i)) for i in range(1, len(p) + 1))


def _check_decomposition_api(p: Perm) -> bool:
    return sort_depth_decomposed(p) == sort_depth(p)


def _check_recursive_identity(p: Perm) -> bool:
    k = p.index(max(p))
    left, right = p[:k], p[k + 1:]
    return stack_sort(p) == stack_sort(left) + stack_sort(right) + (p[k],)


def _check_standardization(p: Perm) -> bool:
    shifted = tuple(3 * x + 7 for x in p)
    return (standardize(stack_sort(shifted)) == stack_sort(standardize(shifted))
            and sort_depth(shifted) == sort_depth(p))


UNPRIMED_CHECKS: dict[str, Callable] = {
    "tail_sorted": _check_tail_sorted,
    "drop_last_subsequence": _check_drop_last,
    "filter_subsequence": _check_filter,
    "reduction": _check_reduction,
    "prefix_decomposition": _check_decomposition,
    "prefix_decomposition_api": _check_decomposition_api,
    "recursive_identity": _check_recursive_identity,
    "standardization_invariance": _check_standardization,
}


def check_unprimed(p: Sequence[int]) -> dict[str, bool]:
    p = tuple(p)
    return {name: check(p) for name, check in UNPRIMED_CHECKS.items()}


def _membership_results(n: int, full: bool) -> list[PropertyResult]:
    """Membership test against tableaux other than the permutation's own.

    With ``full`` every (shape, extension) pair of size ``n`` is tried;
    otherwise only extensions of the permutation's own shape.
    """
    res = PropertyResult("membership_exclusive" + ("_all_shapes" if full else "_same_shape"), n)
    pairs: dict[Composition, list[dict]] = {}
    shapes = list(compositions(n)) if full else []
    for alpha in shapes:
        pairs[alpha] = list(iter_linear_extensions(alpha, guard=None))
    for p in primed_permutations(n):
        T = build_tableau(p)
        own = sorted(T.to_cell.items())
        if not full and T.shape not in pairs:
            pairs[T.shape] = list(iter_linear_extensions(T.shape, guard=None))
        for alpha in (shapes if full else [T.shape]):
            for ext in pairs[alpha]:
                res.checked += 1
                accepted = tableau_membership(p, alpha, ext)
                if accepted != (alpha == T.shape and sorted(ext.items()) == own):
                    res.failures.append(f"{p} vs {alpha} {sorted(ext.items())}: membership={accepted}")
    return [res]


def _hook_results(n: int) -> list[PropertyResult]:
    res = PropertyResult("hook_closed_form", n)
    for alpha in compositions(n):
        for i in range(1, n + 2):
            for j in range(1, len(alpha) + 2):
                res.checked += 1
                a, b = hook_length(alpha, i, j), hook_length_by_definition(alpha, i, j)
                if a != b:
                    res.failures.append(f"{alpha} ({i},{j}): closed form {a}, count {b}")
    return [res]


def _census_results(n: int) -> list[PropertyResult]:
    per_tableau = PropertyResult("census_per_tableau", n)
    per_shape = PropertyResult("census_per_shape", n)
    census = tableau_census(n, guard=None)
    totals: Counter = Counter()
    for e in census:
        per_tableau.checked += 1
        totals[e.shape] += e.count
        if e.count != hook_product(e.shape):
            per_tableau.failures.append(f"{e.tableau.rows()}: {e.count} != {hook_product(e.shape)}")
    for alpha in compositions(n):
        per_shape.checked += 1
        want = count_for_composition(alpha, guard=None)
        if totals[alpha] != want:
            per_shape.failures.append(f"{alpha}: {totals[alpha]} != {want}")
    return [per_tableau, per_shape]


SUITES = ("tableau", "map", "membership", "hooks", "census")


def verify_lemmas(n: int, guard: int | None = DEFAULT_ORACLE_GUARD,
                  full_membership_max: int = 7,
                  suites: Iterable[str] = SUITES) -> list[PropertyResult]:
    """Exhaustive run of the structural checks at size ``n``.

    ``tableau`` facts run over ``S_n'``, ``map`` facts over ``S_n``; the
    remaining suites are the membership cross-check, the hook closed form
    and the census against hook products.
    """
    _guard(n, guard)
    suites = set(suites)
    unknown = suites - set(SUITES)
    if unknown:
        raise ValueError(f"unknown suites {sorted(unknown)}; choose from {SUITES}")
    out: list[PropertyResult] = []
    if "tableau" in suites:
        primed = {name: PropertyResult(name, n) for name in PRIMED_CHECKS}
        for p in primed_permutations(n):
            for name, ok in check_primed(p).items():
                primed[name].checked += 1
                if not ok:
                    primed[name].failures.append(str(p))
        out += primed.values()
    if "map" in suites:
        plain = {name: PropertyResult(name, n) for name in UNPRIMED_CHECKS}
        for p in permutations(range(1, n + 1)):
            for name, ok in check_unprimed(p).items():
                plain[name].checked += 1
                if not ok:
                    plain[name].failures.append(str(p))
        out += plain.values()
    if "membership" in suites:
        out += _membership_results(n, full=n <= full_membership_max)
    if "hooks" in suites:
        out += _hook_results(n)
    if "census" in suites:
        out += _census_results(n)
    return out


def report_json(results: Iterable[PropertyResult]) -> str:
    return json.dumps([asdict(r) for r in results], indent=2)


# --- classical sequences ---------------------------------------------------

def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def zeilberger(n: int) -> int:
    """Closed form for the number of 2-stack-sortable permutations of size ``n``."""
    num = 2 * comb(3 * n, n)
    den = (n + 1) * (2 * n + 1)
    if num % den:
        raise ArithmeticError(f"closed form not integral at n = {n}")
    return num // den


def motzkin(n: int) -> int:
    """Motzkin numbers (OEIS A001006) by their convolution recurrence."""
    if n < 0:
        raise ValueError("n must be non-negative")
    m = [1]
    for k in range(1, n + 1):
        m.append(m[k - 1] + sum(m[a] * m[k - 2 - a] for a in range(k - 1)))
    return m[n]


def classic_counts(n: int, guard: int | None = DEFAULT_ORACLE_GUARD,
                   workers: int = 1) -> tuple[int, int, int, int]:
    """``(1-sortable count, Catalan, 2-sortable count, Zeilberger)``, brute force beside closed form."""
    hist = depth_histogram(n, primed=False, guard=guard, workers=workers)
    w1 = sum(c for d, c in hist.items() if d <= 1)
    w2 = sum(c for d, c in hist.items() if d <= 2)
    return w1, catalan(n), w2, zeilberger(n)


def motzkin_report(max_n: int, counts: Sequence[int] | None = None) -> list[dict]:
    """Compare primed 2-sortable counts with the Motzkin numbers for ``n = 1..max_n``."""
    if counts is None:
        from .dp import count_table
        counts = [c for _, c in count_table(max_n, 2)]
    return [{"n": n, "count": str(c), "motzkin": str(motzkin(n)), "match": c == motzkin(n)}
            for n, c in enumerate(counts, start=1)]
