"""Shared pytest wiring: makes `oracles` importable and prints one
PASS/FAIL line per acceptance criterion in the terminal summary."""

import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

ACCEPTANCE_RESULTS: list[tuple[int, str, bool, str]] = []


def record_acceptance(number: int, label: str, passed: bool, detail: str = "") -> None:
    ACCEPTANCE_RESULTS.append((number, label, passed, detail))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, label, passed, detail in sorted(ACCEPTANCE_RESULTS):
        line = f"ACCEPTANCE {number} ({label}): {'PASS' if passed else 'FAIL'}"
        if detail:
            line += f" [{detail}]"
        terminalreporter.write_line(line)
