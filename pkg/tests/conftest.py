from __future__ import annotations


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS, format_line

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        terminalreporter.write_line(format_line(number, *RESULTS[number]))
