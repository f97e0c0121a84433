import time

import pytest

from pascalmod.verify import run_verify


def test_small_sweep_passes():
    report = run_verify(max_n=16, primes=(2, 3, 5), rows=12, seed=7)
    assert report.passed
    assert report.total_failures == 0
    assert len(report.results) == 22


def test_case_counts_match_declared_sweeps():
    report = run_verify(max_n=8, primes=(2, 3), rows=8, seed=1)
    by_name = {r.name: r for r in report.results}
    # 0 <= i <= n <= 8 is 45 pairs, times two primes
    assert by_name["valuation/kummer-equivalence"].cases == 45 * 2
    # special places sweep runs to 2 * max_n
    assert by_name["carries/special-equals-stopping"].cases == 17 * 18 // 2


def test_deterministic_for_fixed_seed():
    a = run_verify(max_n=8, primes=(2, 3), rows=8, seed=42)
    b = run_verify(max_n=8, primes=(2, 3), rows=8, seed=42)
    assert a.stable_json() == b.stable_json()


def test_vacuous_sweep_max_n_zero():
    report = run_verify(max_n=0, primes=(2,), rows=1, seed=0)
    assert report.total_failures == 0
    by_name = {r.name: r for r in report.results}
    assert by_name["valuation/kummer-equivalence"].cases == 1
    assert by_name["valuation/theorem2-nonnegative"].cases == 1


@pytest.mark.slow
def test_default_parameters_pass_under_a_minute():
    start = time.perf_counter()
    report = run_verify()
    elapsed = time.perf_counter() - start
    assert report.passed
    assert elapsed < 60.0


def test_text_report_lists_every_property():
    report = run_verify(max_n=4, primes=(2,), rows=4, seed=0)
    text = report.to_text()
    for r in report.results:
        assert r.name in text
    assert "all properties passed" in text
