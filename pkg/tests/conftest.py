import pytest

from acceptance_log import RESULTS


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        status, name, seconds = RESULTS[number]
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {name}  ({seconds:.2f} s)")
