"""Acceptance suite: one test per shipped criterion, each printing a verdict line.

Run with `pytest tests/test_acceptance.py -s` to see the per-criterion lines.
"""

import time
from pathlib import Path

from pascalmod.carries import add_with_trace
from pascalmod.cli import parse_and_dispatch
from pascalmod.digits import digit_sum, to_digits
from pascalmod.render import RenderSpec, render_mask, stripe_survivors
from pascalmod.triangle import all_interior_divisible_rows, composite_mask, divisibility_mask
from pascalmod.valuation import (
    binomial_divisible_by,
    digit_sum_valuation,
    factorial_valuation_bruteforce,
    kummer_valuation,
    legendre_valuation,
)

DATA = Path(__file__).parent / "data"


def report(num, ok, desc):
    print(f"{'PASS' if ok else 'FAIL'} criterion {num:2d}: {desc}")
    assert ok, f"criterion {num}: {desc}"


def timed(fn):
    start = time.perf_counter()
    result = fn()
    return result, time.perf_counter() - start


def test_criterion_01_base_conversion(capsys):
    assert parse_and_dispatch(["digits", "2932", "--base", "9"]) == 0
    out1 = capsys.readouterr().out
    assert parse_and_dispatch(["digits", "1892", "--base", "7"]) == 0
    out2 = capsys.readouterr().out
    # time the conversion itself, best of a few calls
    elapsed = min(timed(lambda: to_digits(2932, 9).display())[1] for _ in range(5))
    ok = "4017" in out1 and "5342" in out2 and elapsed < 0.001
    with capsys.disabled():
        report(1, ok, "base-conversion fidelity (4017 base 9, 5342 base 7, < 1 ms)")


def test_criterion_02_carry_bookkeeping(capsys):
    t, _ = timed(lambda: add_with_trace(136, 208, 7))
    elapsed = min(timed(lambda: add_with_trace(136, 208, 7))[1] for _ in range(5))
    diff = digit_sum(136, 7) + digit_sum(208, 7) - digit_sum(344, 7)
    ok = t.sum_n.display() == "1001" and t.carry_count == 3 and diff == 18 and diff // 6 == 3 and elapsed < 0.001
    with capsys.disabled():
        report(2, ok, "253_7 + 415_7 = 1001_7 with 3 carries, (I+J-N) = 18, c = 18/6 (< 1 ms)")


def test_criterion_03_factorial_valuations(capsys):
    def all_three():
        return (
            (factorial_valuation_bruteforce(132, 5), legendre_valuation(132, 5), digit_sum_valuation(132, 5)),
            (factorial_valuation_bruteforce(365, 7), legendre_valuation(365, 7), digit_sum_valuation(365, 7)),
        )

    (v132, v365), elapsed = timed(all_three)
    ok = v132 == (32, 32, 32) and v365 == (60, 60, 60) and elapsed < 0.010
    with capsys.disabled():
        report(3, ok, "v5(132!) = 32 and v7(365!) = 60 by all three methods (< 10 ms)")


def _legendre_table(top, p):
    table = [0] * (top + 1)
    for n in range(top + 1):
        total, m = 0, n
        while m:
            m //= p
            total += m
        table[n] = total
    return table


def test_criterion_04_kummer_sweep(capsys):
    def sweep():
        bad = []
        for p in (2, 3, 5, 7, 11, 13):
            table = _legendre_table(512, p)
            for n in range(513):
                for i in range(n + 1):
                    if kummer_valuation(n, i, p) != table[n] - table[i] - table[n - i]:
                        bad.append((n, i, p))
        return bad

    failures, elapsed = timed(sweep)
    ok = not failures and elapsed < 10.0
    with capsys.disabled():
        report(4, ok, f"Kummer sweep 0 <= i <= n <= 512, 6 primes: {len(failures)} failures ({elapsed:.1f}s < 10s)")


def test_criterion_05_theorem2_nonnegative(capsys):
    from pascalmod.valuation import primes_upto

    bad = []
    tables = {p: _legendre_table(512, p) for p in primes_upto(512)}
    for n in range(513):
        for p, table in tables.items():
            if p > n:
                break
            for i in range(n + 1):
                if table[n] - table[i] - table[n - i] < 0:
                    bad.append((n, i, p))
    with capsys.disabled():
        report(5, not bad, f"Theorem 2 in valuation form, same sweep: {len(bad)} negative valuations")


def test_criterion_06_theorem3_sweep(capsys):
    def sweep():
        bad = []
        for p in (2, 3, 5, 7, 11, 13):
            brute = 0
            for n in range(2001):
                if n:
                    k = n
                    while k % p == 0:
                        k //= p
                        brute += 1
                if not (brute == legendre_valuation(n, p) == (n - digit_sum(n, p)) // (p - 1)):
                    bad.append((n, p))
                if (n - digit_sum(n, p)) % (p - 1):
                    bad.append((n, p, "inexact"))
        return bad

    failures, elapsed = timed(sweep)
    ok = not failures and elapsed < 5.0
    with capsys.disabled():
        report(6, ok, f"Theorem 3 sweep n <= 2000, 6 primes: {len(failures)} failures ({elapsed:.1f}s < 5s)")


def test_criterion_07_figure_reproduction(capsys):
    ok = True
    for p, rows in ((2, 200), (3, 200), (7, 200), (5, 200)):
        outputs = {
            method: render_mask(divisibility_mask(p, rows, method), RenderSpec())
            for method in ("recurrence", "kummer", "digit-domination")
        }
        ok = ok and len(set(outputs.values())) == 1
    with capsys.disabled():
        report(7, ok, "byte-identical PBM masks from all three methods, p in {2, 3, 5, 7}, R = 200")


def test_criterion_08_next_white_triangle(capsys):
    ok = all_interior_divisible_rows(7, 200) == {7, 49}
    with capsys.disabled():
        report(8, ok, "all-interior-divisible rows mod 7 below 200 are exactly {7, 49}")


def test_criterion_09_fractal_counting(capsys):
    def count():
        ok = True
        mask2 = divisibility_mask(2, 32)
        for k in range(1, 6):
            ok = ok and sum(sum(row) for row in mask2.grid[: 2**k]) == 3**k
        for p in (3, 5):
            mask = divisibility_mask(p, p**3)
            for k in range(1, 4):
                ok = ok and sum(sum(row) for row in mask.grid[: p**k]) == (p * (p + 1) // 2) ** k
        return ok

    ok, elapsed = timed(count)
    ok = ok and elapsed < 1.0
    with capsys.disabled():
        report(9, ok, f"nonzero cells in rows < p^k match (p(p+1)/2)^k closed form ({elapsed:.2f}s < 1s)")


def test_criterion_10_stripe_union(capsys):
    union = set()
    for place in range(1, 8):
        union |= stripe_survivors(place, 64, {"intersection"})
    ok = union == divisibility_mask(2, 64).white_cells()
    with capsys.disabled():
        report(10, ok, "union of per-place special-cell survivors equals white cells at R = 64")


def test_criterion_11_golden_image(capsys):
    golden = (DATA / "mod2_32rows.pbm").read_bytes()
    fresh = render_mask(divisibility_mask(2, 32, "recurrence"), RenderSpec())
    ok = fresh == golden
    with capsys.disabled():
        report(11, ok, "32-row mod-2 PBM matches the checked-in golden byte-for-byte")


def test_criterion_12_composite_divisibility(capsys):
    assert parse_and_dispatch(["divisible", "4", "2", "--mod", "6"]) == 0
    out6 = capsys.readouterr().out
    assert parse_and_dispatch(["divisible", "4", "2", "--mod", "4"]) == 0
    out4 = capsys.readouterr().out
    bad = []
    for m in (4, 6, 8, 9, 12):
        mask = composite_mask(m, 200)
        for n in range(200):
            for i in range(n + 1):
                if binomial_divisible_by(n, i, m) == mask.nonzero(n, i):
                    bad.append((n, i, m))
    ok = "true" in out6 and "false" in out4 and not bad
    with capsys.disabled():
        report(12, ok, f"divisible 4 2 mod 6/4 verdicts and recurrence-mask agreement: {len(bad)} failures")
