import time
from contextlib import contextmanager

import pytest

_RESULTS: dict[int, tuple[bool, str]] = {}


@contextmanager
def _timed(number: int, title: str, limit: float):
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        elapsed = time.perf_counter() - start
        _RESULTS[number] = (False, f"{title}: {type(exc).__name__} after {elapsed:.4g}s")
        raise
    elapsed = time.perf_counter() - start
    ok = elapsed < limit
    _RESULTS[number] = (ok, f"{title}: {elapsed:.4g}s (limit {limit:g}s)")
    assert ok, f"criterion {number} took {elapsed:.4g}s, limit {limit:g}s"


@pytest.fixture
def criterion():
    """Context manager that times a block and records the outcome for the summary."""
    return _timed


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        ok, line = _RESULTS[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number} {line}")
