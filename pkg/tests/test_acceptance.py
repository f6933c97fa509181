"""Acceptance gate: every criterion at its pinned tolerance.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the one-line
pass/fail report per criterion (the CLI ``sixfold selftest`` prints the
same lines).
"""

import pytest

from sixfold.acceptance import ALL_CRITERIA, BUDGETS


@pytest.mark.parametrize("criterion", ALL_CRITERIA, ids=lambda fn: fn.__name__)
def test_criterion(criterion):
    result = criterion()
    status = "PASS" if result.passed else "FAIL"
    print(f"\n{status}  {result.name}  [{result.seconds:.1f}s]  {result.detail}")
    assert result.passed, f"{result.name}: {result.detail}"
    assert result.seconds < BUDGETS[criterion.__name__], "over time budget"
