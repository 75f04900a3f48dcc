from __future__ import annotations

import pytest

_LINES: dict[int, str] = {}


@pytest.fixture
def record():
    def _record(n: int, label: str, passed: bool, detail: str = "") -> None:
        line = f"{'PASS' if passed else 'FAIL'} criterion {n}: {label}"
        if detail:
            line += f" ({detail})"
        _LINES[n] = line
        print(line)

    return _record


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(_LINES):
            terminalreporter.write_line(_LINES[n])
