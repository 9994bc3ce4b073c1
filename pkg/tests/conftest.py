import re

_CRITERION = re.compile(r"test_criterion_(\d+)")
_outcomes = {}


def pytest_runtest_makereport(item, call):
    m = _CRITERION.search(item.name)
    if not m:
        return
    n = int(m.group(1))
    failed = call.excinfo is not None and call.when in ("setup", "call")
    if failed or n not in _outcomes:
        _outcomes[n] = _outcomes.get(n, True) and not failed


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_outcomes):
        terminalreporter.write_line(f"criterion {n}: {'PASS' if _outcomes[n] else 'FAIL'}")
