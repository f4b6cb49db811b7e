import pytest

CRITERIA: dict[int, tuple[str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    number = getattr(item.function, "criterion", None)
    if number is None or report.when != "call":
        return
    status = "PASS" if report.passed else "FAIL"
    CRITERIA[number] = (status, item.function.__doc__.strip().splitlines()[0])


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        status, title = CRITERIA[number]
        terminalreporter.write_line(f"[{status}] criterion {number:2d}: {title}")
