import pytest

from quasidim import HPolytope


@pytest.fixture
def trapezoid():
    """x1, x2 >= 0, x1 + x2 <= 3, 2 x1 <= 5."""
    return HPolytope(((-1, 0), (0, -1), (1, 1), (2, 0)), (0, 0, 3, 5))


@pytest.fixture
def staircase():
    """The antichain {(2,1), (0,3)} with weights (2,1)."""
    return [(2, 1), (0, 3)], (2, 1)


ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        ACCEPTANCE[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, status in sorted(ACCEPTANCE.items()):
        terminalreporter.write_line(f"{status}  {name}")
