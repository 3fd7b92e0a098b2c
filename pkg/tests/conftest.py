import json
from pathlib import Path

import pytest

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def oracle_values():
    return json.loads((Path(__file__).parent / "fixtures" / "oracle_values.json").read_text())


@pytest.fixture
def record():
    def _record(name, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] {name}" + (f"  ({detail})" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok
    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
