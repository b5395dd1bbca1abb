"""One test per acceptance criterion; each records a PASS/FAIL line for the summary."""

import time
from contextlib import contextmanager
from math import factorial

from conftest import ACCEPTANCE_LINES, RUNNING_EXAMPLE
from golden import GOLDEN_T2, GOLDEN_T3, GOLDEN_T4

from stacksort.cli import annotate
from stacksort.dp import INITIAL_STATE, DPState, count_sortable, count_table, enumerate_positions
from stacksort.dp import extend_hooks, successors
from stacksort.hooks import count_for_composition, hook_product, hook_table, linear_extensions
from stacksort.oracle import (brute_count, catalan, classic_counts, motzkin, motzkin_report,
                              tableau_census, verify_lemmas, zeilberger)
from stacksort.perm import iterates
from stacksort.tableau import build_tableau, compositions


@contextmanager
def criterion(number, name, budget=None):
    start = time.perf_counter()
    try:
        yield
        elapsed = time.perf_counter() - start
        assert budget is None or elapsed <= budget, f"took {elapsed:.1f}s, budget {budget}s"
    except BaseException as exc:
        ACCEPTANCE_LINES.append(f"FAIL [{number:2d}] {name}: {exc}")
        print(ACCEPTANCE_LINES[-1])
        raise
    ACCEPTANCE_LINES.append(f"PASS [{number:2d}] {name} ({elapsed:.1f}s)")
    print(ACCEPTANCE_LINES[-1])


def _check_golden(n_max, t, golden):
    got = count_table(n_max, t)
    assert [n for n, _ in got] == list(range(1, n_max + 1))
    for n, c in got:
        assert str(c) == str(golden[n - 1]), f"n={n}: {c} != {golden[n - 1]}"


def test_01_golden_t2():
    with criterion(1, "count_table(30, 2) equals the published t=2 column", budget=60):
        _check_golden(30, 2, GOLDEN_T2)


def test_02_golden_t3():
    with criterion(2, "count_table(14, 3) equals the published t=3 column", budget=600):
        _check_golden(14, 3, GOLDEN_T3)


def test_02_golden_t3_to_30():
    with criterion(2, "optional: count_table(30, 3) equals the published t=3 column", budget=600):
        _check_golden(30, 3, GOLDEN_T3)


def test_03_golden_t4():
    with criterion(3, "count_table(10, 4) equals the published t=4 column", budget=600):
        _check_golden(10, 4, GOLDEN_T4)


def test_04_dp_matches_brute_force():
    with criterion(4, "count_sortable = brute_count for n <= 8, t in 1..n", budget=300):
        for n in range(1, 9):
            for t in range(1, n + 1):
                dp, brute = count_sortable(n, t), brute_count(n, t)
                assert dp == brute, f"n={n} t={t}: dp {dp} brute {brute}"


def test_05_hook_product_census():
    with criterion(5, "tableau classes have hook-product size for n <= 7"):
        for n in range(1, 8):
            census = tableau_census(n)
            per_shape = {}
            for entry in census:
                assert entry.count == hook_product(entry.shape), f"n={n} shape {entry.shape}"
                per_shape[entry.shape] = per_shape.get(entry.shape, 0) + entry.count
            for alpha in compositions(n):
                want = linear_extensions(alpha) * hook_product(alpha)
                assert per_shape.get(alpha, 0) == want == count_for_composition(alpha)
            assert sum(per_shape.values()) == factorial(n)


def test_06_lemma_suite():
    with criterion(6, "verify_lemmas(n) has no counterexamples for n <= 7"):
        for n in range(1, 8):
            bad = [r for r in verify_lemmas(n) if not r.ok]
            assert not bad, "; ".join(f"{r.property} n={r.n}: {r.failures[:2]}" for r in bad)


def test_07_factorial_ceiling():
    with criterion(7, "count_sortable(n, n) = n! for n <= 8"):
        for n in range(1, 9):
            assert count_sortable(n, n) == factorial(n), f"n={n}"


def test_08_classical_closed_forms():
    with criterion(8, "brute-force 1- and 2-sortable counts match Catalan and Zeilberger for n <= 8"):
        for n in range(1, 9):
            w1, cat, w2, zeil = classic_counts(n)
            assert cat == catalan(n) and zeil == zeilberger(n)
            assert w1 == cat, f"n={n}: {w1} != Catalan {cat}"
            assert w2 == zeil, f"n={n}: {w2} != {zeil}"


def test_09_motzkin_report():
    # a mismatch would refute a conjecture, not a bug: WARN, not FAIL
    rows = motzkin_report(30)
    assert [r["n"] for r in rows] == list(range(1, 31))
    for r in rows:
        assert r["match"] == (int(r["count"]) == motzkin(r["n"]))
    bad = [r["n"] for r in rows if not r["match"]]
    name = "count_sortable(n, 2) against Motzkin numbers for n <= 30"
    if bad:
        ACCEPTANCE_LINES.append(f"WARN [ 9] {name}: differs at n = {bad}")
    else:
        ACCEPTANCE_LINES.append(f"PASS [ 9] {name}")
    print(ACCEPTANCE_LINES[-1])


def test_10_regression_fixtures():
    with criterion(10, "running example iterates, tableau, hooks and successor data"):
        p = RUNNING_EXAMPLE
        its = iterates(p)
        assert its == [
            (9, 3, 10, 7, 8, 2, 6, 1, 4, 5, 0),
            (3, 9, 7, 2, 1, 4, 0, 5, 6, 8, 10),
            (3, 1, 2, 0, 4, 5, 6, 7, 8, 9, 10),
            (1, 0, 2, 3, 4, 5, 6, 7, 8, 9, 10),
            (0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10),
        ]
        assert [annotate(q) for q in its[:-1]] == [
            "(9 3) 10 (7) 8 (2) 6 (1 4) 5 0",
            "(3) 9 7 (2 1) 4 0 5 6 8 10",
            "3 (1) 2 0 4 5 6 7 8 9 10",
            "1 0 2 3 4 5 6 7 8 9 10",
        ]
        T = build_tableau(p)
        assert T.shape == (3, 2, 1, 4)
        assert T.rows() == [[10, 9, 3], [8, 7], [6], [5, 4, 2, 1]]
        assert hook_table(T.shape).rows() == [[1, 1, 2], [1, 1], [1], [1, 1, 3, 6]]
        s = DPState(6, 3, 1, (1, 1, 3), (2, 3, 1))
        assert (max(s.w, 4), extend_hooks(s, 4)) == (4, (1, 3, 6, 10))
        assert (5, 4, 2, 1) in enumerate_positions(s, 4)
        assert (DPState(10, 4, 4, (1, 3, 6, 10), (5, 4, 2, 1)), 18) in successors(s, 4)
        assert successors(INITIAL_STATE, 1) == [(DPState(1, 1, 1, (1,), (1,)), 1)]
