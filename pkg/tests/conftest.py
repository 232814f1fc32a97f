import pytest

_results: dict[int, tuple[str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None:
        return
    number, title = mark.args
    if rep.when == "call" or rep.failed or rep.skipped:
        prev = _results.get(number, (title, "PASS"))[1]
        status = "FAIL" if rep.failed else ("SKIP" if rep.skipped else "PASS")
        if prev == "FAIL":
            status = "FAIL"
        _results[number] = (title, status)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number in sorted(_results):
        title, status = _results[number]
        terminalreporter.write_line(f"{status} criterion {number}: {title}")
