import re

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")
_results: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    match = _CRITERION.search(report.nodeid)
    if not match:
        return
    number, name = int(match.group(1)), match.group(2).replace("_", " ")
    if report.when == "call" or report.failed:
        if report.failed or number not in _results:
            _results[number] = ("PASS" if report.passed else "FAIL", name)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        verdict, name = _results[number]
        terminalreporter.write_line(f"criterion {number:2d}: {verdict}  {name}")
