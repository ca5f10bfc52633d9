import re
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

# (criterion number, test suffix) -> "PASS" / "FAIL ..."
_CRITERIA: dict[tuple[int, str], str] = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_c(\d+)_(\w+)", report.nodeid)
    if not m:
        return
    key = (int(m.group(1)), m.group(2))
    if report.when == "call" or report.outcome != "passed":
        # an xfail counts as a failed criterion in the summary
        if hasattr(report, "wasxfail"):
            verdict = f"FAIL (expected: {report.wasxfail})"
        else:
            verdict = "PASS" if report.passed else "FAIL"
        if not _CRITERIA.get(key, "").startswith("FAIL"):
            _CRITERIA[key] = verdict


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for (num, name), verdict in sorted(_CRITERIA.items()):
        terminalreporter.write_line(f"criterion {num:>2} {verdict}  {name}")
