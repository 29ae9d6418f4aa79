import sys
from pathlib import Path

import pytest

TESTS = Path(__file__).parent
sys.path.insert(0, str(TESTS))

from partialhopf import catalog  # noqa: E402

MUTATIONS = TESTS / "fixtures" / "mutations"
GOLDEN = TESTS / "golden"

# criterion number -> (status line); filled by test_acceptance
ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture(scope="session")
def hss_action():
    return catalog.load("action_hss").payload


@pytest.fixture(scope="session")
def hs_action():
    return catalog.load("action_hs").payload


@pytest.fixture(scope="session")
def h00_action():
    return catalog.load("action_h00").payload


@pytest.fixture(scope="session")
def h4():
    return catalog.load("h4").payload


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])
