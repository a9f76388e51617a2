"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v`` or ``kempf acceptance``.
"""

from __future__ import annotations

import pytest

from kempf.acceptance import CRITERIA

from .conftest import ACCEPTANCE_LINES


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{i + 1}" for i in range(len(CRITERIA))])
def test_criterion(criterion):
    result = criterion()
    ACCEPTANCE_LINES.append(result.line())
    print(result.line())
    assert result.passed, result.detail
