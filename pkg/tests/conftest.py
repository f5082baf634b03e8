"""Shared pytest hooks.

The acceptance tests register one verdict per criterion; printing them
from a terminal-summary hook keeps the lines out of reach of pytest's
file-descriptor capture, so they show up for passing runs too.
"""

_VERDICTS = []


def record_verdict(label, ok):
    _VERDICTS.append((label, ok))


def pytest_terminal_summary(terminalreporter):
    if not _VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok in _VERDICTS:
        terminalreporter.write_line(f"[acceptance] {label}: {'PASS' if ok else 'FAIL'}")
