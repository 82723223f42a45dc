import contextlib
import os
import sys
import time

import pytest

sys.path.insert(0, os.path.dirname(__file__))

_RESULTS = {}


class _Recorder:
    @contextlib.contextmanager
    def __call__(self, number: int, title: str, budget: float):
        start = time.perf_counter()
        try:
            yield
        except BaseException as exc:
            elapsed = time.perf_counter() - start
            _RESULTS[number] = (title, False, elapsed, budget, type(exc).__name__)
            raise
        elapsed = time.perf_counter() - start
        ok = elapsed <= budget
        _RESULTS[number] = (title, ok, elapsed, budget, "" if ok else "over time budget")
        assert ok, f"criterion {number} took {elapsed:.2f}s (budget {budget}s)"


@pytest.fixture
def criterion():
    return _Recorder()


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        title, ok, elapsed, budget, note = _RESULTS[number]
        status = "PASS" if ok else "FAIL"
        line = f"criterion {number}: {status}  {title}  ({elapsed:.2f}s / {budget:g}s)"
        terminalreporter.write_line(line + (f"  [{note}]" if note else ""))
