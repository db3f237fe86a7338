import io
import re
from contextlib import redirect_stderr, redirect_stdout

import pytest

from partition_evolve import cli

# criterion number -> (label, outcome), filled as acceptance tests report.
_acceptance: dict[int, tuple[str, str]] = {}

_ACCEPTANCE_ID = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")


@pytest.fixture
def run_cli():
    """Invoke the CLI in-process; returns (exit_code, stdout, stderr)."""

    def run(*argv):
        out = io.StringIO()
        err = io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            code = cli.main([str(arg) for arg in argv])
        return code, out.getvalue(), err.getvalue()

    return run


def pytest_runtest_logreport(report):
    match = _ACCEPTANCE_ID.search(report.nodeid)
    if match is None:
        return
    number = int(match.group(1))
    label = match.group(2).replace("_", " ")
    if report.when == "call":
        outcome = "PASS" if report.passed else (
            "SKIP" if report.skipped else "FAIL")
        _acceptance[number] = (label, outcome)
    elif report.when == "setup" and not report.passed:
        _acceptance[number] = (label, "SKIP" if report.skipped else "FAIL")
    elif report.when == "teardown" and report.failed:
        _acceptance[number] = (label, "FAIL")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        label, outcome = _acceptance[number]
        terminalreporter.write_line(f"criterion {number} ({label}): {outcome}")
