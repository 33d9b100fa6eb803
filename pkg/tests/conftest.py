"""Shared test plumbing.

The acceptance tests record one verdict line per criterion here; the terminal
summary hook replays them after the run, where pytest's output capture no
longer hides them.  A plain ``pytest -v`` therefore always ends with the nine
ACCEPTANCE lines.
"""

from __future__ import annotations

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
