import os
import sys

from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

_CRITERIA: dict[str, str] = {}


def _criterion(nodeid: str) -> str | None:
    if "test_acceptance.py::test_criterion_" not in nodeid:
        return None
    return nodeid.split("::")[-1][len("test_criterion_"):]


def pytest_runtest_logreport(report):
    key = _criterion(report.nodeid)
    if key is None:
        return
    if report.when == "call" or report.failed:
        if _CRITERIA.get(key) != "FAIL":
            _CRITERIA[key] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for key in sorted(_CRITERIA):
        num, _, label = key.partition("_")
        terminalreporter.write_line(f"criterion {int(num):2d}: {_CRITERIA[key]}  {label.replace('_', ' ')}")
