import sys
import time
from pathlib import Path

import hypothesis
import pytest

sys.path.insert(0, str(Path(__file__).parent))

hypothesis.settings.register_profile("ci", max_examples=200, deadline=None)
hypothesis.settings.load_profile("ci")

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def h2p_table_1e5():
    """Exact (h, ord2, ambiguous) for every odd prime below 10^5, plus build time."""
    from purequartic.batch import h2p_table

    start = time.perf_counter()
    table = h2p_table(10 ** 5)
    return table, time.perf_counter() - start


@pytest.fixture
def acceptance():
    def report(number, name, passed, detail=""):
        line = f"criterion {number} [{'PASS' if passed else 'FAIL'}] {name}"
        if detail:
            line += f" -- {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
    return report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
