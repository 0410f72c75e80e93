import numpy as np
import pytest

# Running example (n = 4): two biword matrices, their product and images.
X_EX = np.array([[0, 0, 0, 0], [1, 0, 1, 0], [0, 0, 3, 0], [0, 1, 0, 0]])
Y_EX = np.array([[0, 0, 1, 1], [0, 0, 0, 1], [1, 0, 0, 0], [0, 0, 0, 0]])
XY_EX = np.array([[0, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0]])
PHI_X = np.array([[0, 1, 2, 6, 6], [0, 1, 2, 6, 6], [0, 0, 1, 4, 4], [0, 0, 1, 1, 1], [0, 0, 0, 0, 0]])
PHI_Y = np.array([[0, 1, 1, 2, 4], [0, 1, 1, 1, 2], [0, 1, 1, 1, 1], [0, 0, 0, 0, 0], [0, 0, 0, 0, 0]])
PHI_XY = np.array([[0, 1, 1, 2, 3], [0, 1, 1, 2, 3], [0, 1, 1, 1, 2], [0, 1, 1, 1, 1], [0, 0, 0, 0, 0]])

# k = 77 density block, upper-right anchored
M77 = np.array([[2, 0, 0, 1], [0, 1, 1, 2], [1, 1, 3, 1], [0, 0, 0, 3]])


@pytest.fixture
def rng():
    return np.random.default_rng(20261018)


ACCEPTANCE_LINES = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    status = "PASS" if report.passed else "FAIL"
    detail = dict(report.user_properties).get("detail")
    ACCEPTANCE_LINES.append(f"[{status}] {marker.args[0]}" + (f" -- {detail}" if detail else ""))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(text): acceptance criterion description")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
