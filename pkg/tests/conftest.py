import pytest

_ACCEPTANCE_LINES = []


class AcceptanceRecorder:
    def __init__(self, criterion):
        self.criterion = criterion

    def check(self, ok, detail):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {self.criterion}: {detail}"
        _ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line


@pytest.fixture
def acceptance(request):
    marker = request.node.get_closest_marker("criterion")
    return AcceptanceRecorder(marker.args[0] if marker else request.node.name)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(id): acceptance criterion number")
    config.addinivalue_line("markers", "slow: takes more than a few seconds")


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
