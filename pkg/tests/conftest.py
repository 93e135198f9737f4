import contextlib
import time

import pytest

_ACCEPTANCE = []


@pytest.fixture
def criterion():
    """Record one acceptance criterion as PASS/FAIL for the end-of-run summary."""

    @contextlib.contextmanager
    def record(number, title):
        start = time.perf_counter()
        detail = {}
        try:
            yield detail
        except BaseException:
            _ACCEPTANCE.append((number, "FAIL", title, time.perf_counter() - start, detail))
            raise
        _ACCEPTANCE.append((number, "PASS", title, time.perf_counter() - start, detail))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, status, title, elapsed, detail in sorted(_ACCEPTANCE):
        extra = " ".join(f"{k}={v}" for k, v in detail.items())
        terminalreporter.write_line(f"[{status}] {number}. {title} ({elapsed:.2f}s) {extra}".rstrip())
