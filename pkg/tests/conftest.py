import re

import pytest

from kfactor import factorization as fz

# the factorization drawn in the k=1 worked example
TAUI = "(6 7)(0 2)(3 6)(3 10)(8 9)(0 3)(5 6)(4 5)(8 10)(1 2)"
TAUI_PARENTS = (4, 6, 4, 0, 9, 0, 3, 3, 4, 2)

# the k=2, n=10 worked example
GENK = "(0 1 4)(6 7 8)(13 16 17)(5 6 9)(18 19 20)(0 13 18)(10 11 12)(5 10 13)(2 3 4)(14 15 16)"


@pytest.fixture
def taui():
    return fz.parse_text(TAUI)


@pytest.fixture
def genk():
    return fz.parse_text(GENK)


_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance" in report.nodeid:
        m = re.search(r"test_criterion_(\d+)_(\w+)", report.nodeid)
        if m:
            _acceptance.append((int(m.group(1)), m.group(2), report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for num, name, outcome, duration in sorted(_acceptance):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {num:2d} {name:<28} {status}  ({duration:.2f}s)")
