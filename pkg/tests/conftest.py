import os
import re

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

_CRITERIA = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    m = re.search(r"test_criterion_(\d+)", item.name)
    if not m:
        return
    if report.when == "call" or report.failed:
        title = (item.function.__doc__ or "").strip().splitlines()[0] if item.function.__doc__ else item.name
        key = int(m.group(1))
        prev = _CRITERIA.get(key)
        if prev is None or prev[0] == "passed":
            _CRITERIA[key] = (report.outcome, title)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for key in sorted(_CRITERIA):
        outcome, title = _CRITERIA[key]
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {key}: {status}  {title}")
