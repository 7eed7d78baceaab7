import contextlib
import sys
import time
from pathlib import Path

import pytest

TESTS = Path(__file__).parent
FIXTURES = TESTS / "fixtures"
sys.path.insert(0, str(TESTS))

# (criterion, status, detail) lines collected by the acceptance suite
ACCEPTANCE_RESULTS = []


@pytest.fixture
def fixtures_dir():
    return FIXTURES


@pytest.fixture
def criterion():
    """Context manager recording one acceptance criterion as PASS, FAIL or
    SKIP (a criterion that cannot be checked in this environment)."""

    @contextlib.contextmanager
    def record(name):
        detail = {}
        start = time.perf_counter()
        try:
            yield detail
        except pytest.skip.Exception as exc:
            ACCEPTANCE_RESULTS.append((name, "SKIP", str(exc.msg)))
            raise
        except BaseException as exc:
            ACCEPTANCE_RESULTS.append((name, "FAIL", f"{type(exc).__name__}: {exc}".splitlines()[0]))
            raise
        elapsed = time.perf_counter() - start
        note = detail.get("note", "")
        ACCEPTANCE_RESULTS.append((name, "PASS", f"{note} [{elapsed:.2f}s]".strip()))

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, status, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{status}  {name}: {detail}")
