"""Prints one PASS/FAIL line per acceptance criterion at the end of the run."""

import pytest

_RESULTS: dict[int, tuple[str, str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    detail = dict(item.user_properties).get("detail", "")
    if rep.when == "call":
        _RESULTS[number] = ("PASS" if rep.passed else "FAIL", title, detail)
    elif rep.failed or (rep.when == "setup" and rep.skipped):
        _RESULTS[number] = ("FAIL" if rep.failed else "SKIP", title, detail)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        status, title, detail = _RESULTS[number]
        line = f"criterion {number:2d}: {status}  {title}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)
