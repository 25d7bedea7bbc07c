import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

# criterion number -> list of (ok, detail); filled by the acceptance tests
CRITERIA: dict[int, list[tuple[bool, str]]] = {}


@pytest.fixture
def criterion():
    def record(number: int, ok: bool, detail: str) -> bool:
        CRITERIA.setdefault(number, []).append((bool(ok), detail))
        print(f"criterion {number}: {'pass' if ok else 'FAIL'} ({detail})")
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        rows = CRITERIA[number]
        ok = all(r[0] for r in rows)
        shown = [d for good, d in rows if not good] or [d for _, d in rows]
        terminalreporter.write_line(f"criterion {number}: {'pass' if ok else 'FAIL'} ({'; '.join(shown)})")
