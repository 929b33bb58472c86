import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

_RESULTS = {}
_NOTES = []


@pytest.fixture
def acceptance_note():
    """Append a line to the acceptance summary printed after the run."""
    return _NOTES.append


def pytest_runtest_logreport(report):
    marker = getattr(report, "criterion", None)
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        if report.skipped and hasattr(report, "wasxfail"):
            outcome = "XFAIL"
        elif report.skipped:
            outcome = "SKIP"
        elif report.passed:
            outcome = "PASS"
        else:
            outcome = "FAIL"
        _RESULTS.setdefault(marker, []).append((report.nodeid.split("::")[-1], outcome,
                                                report.duration))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is not None:
        report.criterion = (mark.kwargs["criterion"], mark.kwargs["title"])


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), runs in sorted(_RESULTS.items()):
        outcomes = {o for _, o, _ in runs}
        if "FAIL" in outcomes:
            verdict = "FAIL"
        elif "XFAIL" in outcomes:
            verdict = "FAIL (expected, see note)"
        elif outcomes == {"SKIP"}:
            verdict = "SKIP"
        else:
            verdict = "PASS"
        line = f"criterion {number}: {verdict}  {title}"
        extras = [f"{name} {o}" for name, o, _ in runs if o in ("XFAIL", "SKIP", "FAIL")]
        if extras:
            line += "  [" + "; ".join(extras) + "]"
        terminalreporter.write_line(line)
    for note in _NOTES:
        terminalreporter.write_line(f"note: {note}")
