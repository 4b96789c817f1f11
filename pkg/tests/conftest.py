import numpy as np
import pytest


ACCEPTANCE_LINES = []


@pytest.fixture
def rng():
    return np.random.default_rng(20100101)


@pytest.fixture
def record():
    """Log one acceptance line and assert the check."""

    def _record(criterion, ok, detail):
        line = f"criterion {criterion}: {'PASS' if ok else 'FAIL'} -- {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
