"""One test per acceptance criterion; each records a PASS/FAIL line that is
printed in the terminal summary."""
from __future__ import annotations

import pytest

import conftest
from liftmod.acceptance import CRITERIA


@pytest.mark.parametrize("number", range(1, 9))
def test_criterion(number):
    result = CRITERIA[number - 1](seed=0)
    print(result.line())
    conftest.ACCEPTANCE_LINES.append(result.line())
    assert result.passed, result.failures[:5]
