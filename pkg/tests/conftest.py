import pytest

from acceptance_log import RESULTS
from fastgb import checks


@pytest.fixture(autouse=True)
def _invariant_checks():
    checks.enable(True)
    yield
    checks.enable(False)


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(RESULTS):
        ok, note = RESULTS[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {note}")
