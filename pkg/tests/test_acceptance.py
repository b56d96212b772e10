"""Acceptance criteria; each test prints one PASS/FAIL line for its criterion."""

import pytest

from conftest import ACCEPTANCE_LINES
from hyperjet.acceptance import CRITERIA


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda c: c.__name__)
def test_criterion(criterion):
    result = criterion(seed=0)
    line = result.line()
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert not result.failures, result.failures[:3]
    assert result.passed, line
