import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

# Property suites run at least 1000 cases each; derandomized so reruns match.
settings.register_profile(
    "thorough", max_examples=1000, deadline=None, derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large, HealthCheck.filter_too_much])
settings.register_profile("default", deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "thorough"))

ACCEPTANCE = {}


@pytest.fixture
def acceptance():
    """Record a criterion outcome: acceptance(number, passed, detail)."""
    def record(number, passed, detail=""):
        ACCEPTANCE[number] = (passed, detail)
    return record


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    # a criterion that crashed before recording still gets its FAIL line
    name = item.name
    if report.when == "call" and report.failed and name.startswith("test_criterion_"):
        number = int(name.split("_")[2])
        if number not in ACCEPTANCE:
            ACCEPTANCE[number] = (False, f"error: {call.excinfo.typename}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        passed, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}")
