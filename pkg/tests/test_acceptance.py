"""Acceptance gate: frozen golden values and exhaustive cross-checks.

One test per criterion, each printing a single pass/fail line.  All values
are exact integers frozen before the implementations were written; any
mismatch is a hard failure, never a tolerance.
"""

import io
import time
from contextlib import redirect_stderr, redirect_stdout
from itertools import combinations
from random import Random

from rimhom import (
    Rim,
    all_rims,
    build_Dstar,
    build_word,
    even_offset_table,
    ext,
    ext1,
    ext2_vanishes,
    ext_even,
    invariant_factors,
    is_noncrossing,
    kernel_coefficients,
    peak_count,
    period_closed_form,
    period_iterative,
    snf_oracle,
)
from rimhom.cli import main

WORKED_I = Rim(15, frozenset({2, 4, 9, 11, 12, 14, 15}))
WORKED_J = Rim(15, frozenset({1, 2, 4, 6, 7, 10, 13}))
VANISH_I = Rim(15, frozenset({1, 2, 4, 9, 11, 12, 14}))
VANISH_J = Rim(15, frozenset({1, 2, 10, 12, 13, 14, 15}))

PERIOD_GOLDENS = (
    (6, (1, 2, 4, 5), 3),
    (6, (1, 2, 5), 4),
    (15, (1, 2, 4, 9, 11, 12, 14), 30),
    (8, (1, 3, 5, 7), 2),
    (12, (1, 2, 4, 5, 7, 8, 10, 11), 6),
)


def _report(number: int, title: str, ok: bool, detail: str = "") -> None:
    suffix = f" ({detail})" if detail else ""
    print(f"criterion {number} [{title}]: {'PASS' if ok else 'FAIL'}{suffix}")


def _orders(decomposition) -> tuple[int, ...]:
    return tuple(h for h in decomposition.exponents if h > 0)


def _run_cli(argv: list[str]) -> tuple[int, str]:
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue()


def test_criterion_1_period_golden_set():
    start = time.perf_counter()
    failures = []
    for n, members, expected in PERIOD_GOLDENS:
        rim = Rim(n, frozenset(members))
        closed = period_closed_form(rim)
        iterative = period_iterative(rim)
        if closed.projective or closed.period != expected or iterative != closed:
            failures.append((n, members, expected, closed, iterative))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 1.0
    _report(1, "period golden set, both routes", ok, f"{elapsed:.3f}s")
    assert not failures, failures
    assert elapsed < 1.0, f"golden periods took {elapsed:.3f}s"


def test_criterion_2_degree_one_worked_pair():
    matrix = build_Dstar(WORKED_I, WORKED_J)
    p = len(matrix.cols)
    diag = tuple(matrix.entries[(matrix.rows[i], matrix.cols[i])][1] for i in range(p))
    sub = tuple(
        matrix.entries[(matrix.rows[(i + 1) % p], matrix.cols[i])][1] for i in range(p)
    )
    factors = invariant_factors(matrix)
    kernel = kernel_coefficients(WORKED_I, WORKED_J)
    result = ext1(WORKED_I, WORKED_J)
    ok = (
        diag == (1, 0, 2, 1, 1)
        and sub == (0, 0, 1, 2, 2)
        and kernel == (2, 2, 0, 0, 1)
        and (factors.unit_count, factors.exponents, factors.zero_count) == (2, (1, 1), 1)
        and (result.exponents, result.dimension) == ((1, 1), 2)
    )
    _report(2, "degree-one worked pair", ok)
    assert diag == (1, 0, 2, 1, 1)
    assert sub == (0, 0, 1, 2, 2)
    assert kernel == (2, 2, 0, 0, 1)
    assert (factors.unit_count, factors.exponents, factors.zero_count) == (2, (1, 1), 1)
    assert result.exponents == (1, 1) and result.dimension == 2


def test_criterion_3_degree_two_vanishing_pair():
    table = even_offset_table(VANISH_I, VANISH_J)
    degree_two = ext_even(VANISH_I, VANISH_J, 2)
    degree_one = ext1(VANISH_I, VANISH_J)
    word = build_word(VANISH_I, VANISH_J)
    ok = (
        table[(10, 9)] == 0
        and degree_two.dimension == 0
        and degree_one.dimension > 0
        and word.s == 2
    )
    _report(3, "degree-two vanishing pair", ok)
    assert table[(10, 9)] == 0
    assert degree_two.dimension == 0
    assert degree_one.dimension > 0
    assert word.s == 2


def test_criterion_4_mismatch_word():
    word = build_word(WORKED_I, WORKED_J)
    ok = word.raw == "LLRLRLR" and word.s == 3
    _report(4, "mismatch word", ok, f"raw={word.raw} s={word.s}")
    assert word.raw == "LLRLRLR"
    assert word.s == 3


def test_criterion_5_factor_routes_agree_exhaustively():
    start = time.perf_counter()
    checked = 0
    mismatches = []
    for n in range(2, 9):
        for k in range(1, n):
            rims = tuple(all_rims(n, k))
            for a in rims:
                if peak_count(a) < 2:
                    continue  # no relation matrix: the cover is an isomorphism
                for b in rims:
                    matrix = build_Dstar(a, b)
                    fast = invariant_factors(matrix)
                    slow = snf_oracle(matrix)
                    checked += 1
                    if fast != slow:
                        mismatches.append((n, k, a.sorted(), b.sorted(), fast, slow))
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 60.0
    _report(5, "two factor routes agree, all pairs n<=8", ok, f"{checked} pairs, {elapsed:.1f}s")
    assert not mismatches, mismatches[:5]
    assert elapsed < 60.0, f"exhaustive comparison took {elapsed:.1f}s"


def test_criterion_6_symmetry():
    bad = []
    for n in range(2, 9):
        for k in range(1, n):
            rims = tuple(all_rims(n, k))
            for a, b in combinations(rims, 2):
                if sorted(ext1(a, b).exponents) != sorted(ext1(b, a).exponents):
                    bad.append((n, k, a.sorted(), b.sorted()))
    rng = Random(20260814)
    for _ in range(500):
        n = rng.randint(9, 14)
        k = rng.randint(1, n - 1)
        a = Rim(n, frozenset(rng.sample(range(1, n + 1), k)))
        b = Rim(n, frozenset(rng.sample(range(1, n + 1), k)))
        if sorted(ext1(a, b).exponents) != sorted(ext1(b, a).exponents):
            bad.append((n, k, a.sorted(), b.sorted()))
    _report(6, "degree-one symmetry, exhaustive n<=8 plus 500 random", not bad)
    assert not bad, bad[:5]


def test_criterion_7_vanishing_equivalences():
    bad = []
    for n in range(2, 9):
        for k in range(1, n):
            rims = tuple(all_rims(n, k))
            for a in rims:
                for b in rims:
                    if a != b:
                        zero = ext1(a, b).dimension == 0
                        boxed = build_word(a, b).s <= 1
                        clean = is_noncrossing(a, b)
                        if not (zero == boxed == clean):
                            bad.append(("degree1", n, k, a.sorted(), b.sorted()))
                    if peak_count(a) >= 2:
                        witness = ext2_vanishes(a, b)
                        direct = ext_even(a, b, 2).dimension == 0
                        if witness.vanishes != direct:
                            bad.append(("degree2", n, k, a.sorted(), b.sorted()))
    _report(7, "vanishing equivalences, exhaustive n<=8", not bad)
    assert not bad, bad[:5]


def test_criterion_8_periodicity():
    rng = Random(99)
    bad = []
    for _ in range(200):
        while True:
            n = rng.randint(3, 12)
            k = rng.randint(1, n - 1)
            a = Rim(n, frozenset(rng.sample(range(1, n + 1), k)))
            if peak_count(a) >= 2:
                break
        b = Rim(n, frozenset(rng.sample(range(1, n + 1), k)))
        degree = rng.randint(1, 20)
        m = period_closed_form(a).period
        now = ext(a, b, degree)
        later = ext(a, b, degree + m)
        if _orders(now) != _orders(later) or now.dimension != later.dimension:
            bad.append((n, k, a.sorted(), b.sorted(), degree, m, now, later))
    _report(8, "Ext periodicity, 200 random triples", not bad)
    assert not bad, bad[:3]


def test_criterion_9_determinism():
    fixed = (
        ["render", "--n", "6", "--k", "3", "--rim-i", "1,2,5"],
        ["render", "--n", "15", "--k", "7", "--rim-i", "2,4,9,11,12,14,15", "--rim-j", "1,2,4,6,7,10,13"],
        ["render", "--n", "4", "--k", "2", "--rim-i", "1,3", "--rim-j", "2,4"],
        ["period", "--n", "6", "--k", "3", "--rim", "1,2,5", "--json"],
        ["ext", "--n", "15", "--k", "7", "--rim-i", "2,4,9,11,12,14,15", "--rim-j", "1,2,4,6,7,10,13", "--json"],
        ["word", "--n", "15", "--k", "7", "--rim-i", "2,4,9,11,12,14,15", "--rim-j", "1,2,4,6,7,10,13", "--json"],
        ["matrix", "--n", "4", "--k", "2", "--rim-i", "1,3", "--rim-j", "2,4", "--json"],
        ["table", "--n", "4", "--k", "2", "--json"],
    )
    unstable = []
    for argv in fixed:
        code_a, first = _run_cli(argv)
        code_b, second = _run_cli(argv)
        if code_a != 0 or code_b != 0 or first != second or not first:
            unstable.append(argv)
    _report(9, "byte-identical reruns", not unstable)
    assert not unstable, unstable
