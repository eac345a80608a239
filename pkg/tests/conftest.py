import pytest

# criterion number -> {test name: passed}
_ACCEPTANCE: dict[int, dict[str, bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    results = _ACCEPTANCE.setdefault(marker.args[0], {})
    if rep.when == "call" or rep.failed:
        results[item.name] = results.get(item.name, True) and rep.passed


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        results = _ACCEPTANCE[number]
        failed = [name for name, ok in results.items() if not ok]
        line = f"criterion {number:2d}: {'FAIL' if failed else 'PASS'}"
        if failed:
            line += "  (" + ", ".join(failed) + ")"
        tr.write_line(line)
