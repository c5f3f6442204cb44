"""The fifteen acceptance criteria, exact arithmetic throughout.

Each test prints one PASS/FAIL line.  Criteria 1-3 are timed from a cold
cache against their runtime budgets.
"""

import pytest

from lcslab import lcs
from lcslab.verify import CHECKS, run_check

TIME_LIMITS = {1: 5.0, 2: 60.0, 3: 120.0}


@pytest.mark.parametrize("check", CHECKS, ids=[f"criterion_{c.id:02d}" for c in CHECKS])
def test_criterion(check, capsys):
    if check.id in TIME_LIMITS:
        lcs.clear_caches()
    result = run_check(check)
    limit = TIME_LIMITS.get(check.id)
    in_time = limit is None or result.seconds < limit
    status = "PASS" if result.passed and in_time else "FAIL"
    budget = f" (limit {limit:.0f}s)" if limit else ""
    with capsys.disabled():
        print(
            f"\n[{status}] criterion {check.id:2d}: {check.name} "
            f"- {result.detail} [{result.seconds:.2f}s{budget}]"
        )
    assert result.passed, result.detail
    assert in_time, f"took {result.seconds:.2f}s, limit {limit}s"
