"""Shared pytest wiring: the acceptance checklist summary."""

from __future__ import annotations

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter) -> None:
    """Echo one line per acceptance gate after the run, outside capture."""
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.ensure_newline()
    terminalreporter.section("acceptance checklist", sep="=")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
