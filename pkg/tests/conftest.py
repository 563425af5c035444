"""Shared reporting for the acceptance suite.

Each acceptance test records a one-line verdict here; the hook below prints
the collected lines after the normal pytest output so the criterion results
stay visible without -s.
"""

from __future__ import annotations

_ACCEPTANCE: list[tuple[int, bool, str]] = []


def record_acceptance(index: int, ok: bool, detail: str) -> None:
    _ACCEPTANCE.append((index, ok, detail))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for index, ok, detail in sorted(_ACCEPTANCE):
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"criterion {index}: {verdict} - {detail}")
