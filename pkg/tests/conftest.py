import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from crprod.words import format_word, parse_word  # noqa: E402


@pytest.fixture
def W():
    """Notation helper: ``W("xY") == (24, -25)``."""
    return parse_word


@pytest.fixture
def S():
    return format_word


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: acceptance criteria (slow)")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
