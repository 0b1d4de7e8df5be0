from __future__ import annotations

import functools
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cageforge import amalgamate, build_levi, plan_for, reduce  # noqa: E402


@functools.lru_cache(maxsize=None)
def levi(q):
    return build_levi(q)


@functools.lru_cache(maxsize=None)
def construction(q, u=0):
    """(plan, reduced, amalgam) with girth certified during amalgamation."""
    plan = plan_for(q, u)
    reduced = reduce(levi(q), plan.spec)
    return plan, reduced, amalgamate(reduced, plan)


@pytest.fixture
def build():
    return construction


# one line per acceptance criterion, repeated in the terminal summary
ACCEPTANCE_LINES: dict[int, str] = {}


def record_criterion(number, ok, detail):
    line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES[number] = line
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[number])
