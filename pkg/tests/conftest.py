import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from skewpm.matrix_core import new_skew  # noqa: E402

FIXTURES = Path(__file__).parent / "fixtures"

_criteria: list[tuple[str, bool, str]] = []


def record_criterion(name: str, passed: bool, detail: str = "") -> None:
    _criteria.append((name, passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in _criteria:
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {name}  {detail}")


@pytest.fixture
def rng():
    return random.Random(20261014)


@pytest.fixture
def apex_cyclic():
    # 1 -> {2,3,4}; 2 -> 3 -> 4 -> 2
    return new_skew(4, [1, 1, 1, 1, -1, 1])


@pytest.fixture
def apex_transitive():
    return new_skew(4, [1, 1, 1, 1, 1, 1])
