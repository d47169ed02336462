import contextlib
import time

import pytest
from hypothesis import settings

settings.register_profile("ci", max_examples=60, deadline=None)
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile("ci")

_RESULTS = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_RESULTS] = []


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion: ``with criterion(4, "grid equality", limit=60): ...``."""
    results = request.config.stash[_RESULTS]

    @contextlib.contextmanager
    def record(number, title, limit=None):
        start = time.perf_counter()
        status = "FAIL"
        try:
            yield
            elapsed = time.perf_counter() - start
            if limit is not None and elapsed > limit:
                raise AssertionError(f"criterion {number} took {elapsed:.2f}s > {limit}s")
            status = "PASS"
        finally:
            elapsed = time.perf_counter() - start
            bound = f" (limit {limit}s)" if limit is not None else ""
            line = f"{status} criterion {number:>2}: {title} [{elapsed:.2f}s{bound}]"
            results.append(line)
            print(line)

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_RESULTS, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
