import pytest
from hypothesis import settings

settings.register_profile("ci", max_examples=60, deadline=None)
settings.load_profile("ci")

# criterion number -> (passed, seconds, limit, title); filled by test_acceptance
ACCEPTANCE_RESULTS: dict[int, tuple[bool, float, float, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_RESULTS):
        ok, secs, limit, title = ACCEPTANCE_RESULTS[k]
        terminalreporter.write_line(
            f"criterion {k:>2}: {'PASS' if ok else 'FAIL'}  {secs:7.2f}s (limit {limit:g}s)  {title}")
