import sys

import pytest

from hodge_recursion.recursion import HodgeEngine


@pytest.fixture(scope="session")
def engine():
    """One engine for the session; H_{g,l} up to chi = 4 is a few seconds."""
    return HodgeEngine()


@pytest.fixture(scope="session")
def alt_engine():
    return HodgeEngine(form="alt")



def pytest_terminal_summary(terminalreporter):
    lines = []
    for name, mod in list(sys.modules.items()):
        if name.rsplit(".", 1)[-1] == "test_acceptance":
            lines = getattr(mod, "RESULTS", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
