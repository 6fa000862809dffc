from functools import lru_cache

import pytest

from bruhat_nbc import build_system
from bruhat_nbc.typea import Permutation, to_element


@lru_cache(maxsize=None)
def system(name: str):
    return build_system(name)


def perm_el(W, text: str):
    return to_element(W, Permutation.parse(text))


@pytest.fixture(scope="session")
def A3():
    return system("A3")


@pytest.fixture(scope="session")
def B2():
    return system("B2")


# One line per acceptance criterion, echoed at the end of the run.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
