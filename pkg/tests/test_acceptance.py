"""One test per acceptance criterion; each prints its own pass/fail line.

Criteria with stated wall-clock budgets are also timed against them.
"""

import time

import pytest

from parcay.acceptance import CRITERIA

BUDGET_SECONDS = {
    "1 petersen build": 1.0,
    "2 petersen sweep": 10.0,
    "4 non-cayley petersen": 30.0,
    "9 roundtrip": 60.0,
}


@pytest.mark.parametrize("name,check", CRITERIA, ids=[n for n, _ in CRITERIA])
def test_criterion(name, check):
    start = time.perf_counter()
    ok, detail = check()
    elapsed = time.perf_counter() - start
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {name}: {detail} "
          f"({elapsed:.2f}s)")
    assert ok, f"criterion {name}: {detail}"
    budget = BUDGET_SECONDS.get(name)
    if budget is not None:
        assert elapsed < budget, f"criterion {name} took {elapsed:.2f}s"
