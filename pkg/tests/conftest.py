"""Collects one verdict line per acceptance criterion and prints them at the end."""
import pytest

_VERDICTS = {}


class _Recorder:
    def __init__(self, key):
        self.key = key

    def __call__(self, ok, detail):
        _VERDICTS[self.key] = (bool(ok), detail)
        return ok


@pytest.fixture
def criterion(request):
    marker = request.node.get_closest_marker("criterion")
    key = marker.args[0]
    _VERDICTS.setdefault(key, (False, "did not complete"))
    return _Recorder(key)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number")


def pytest_collection_modifyitems(items):
    for item in items:
        marker = item.get_closest_marker("criterion")
        if marker is not None:
            item.user_properties.append(("criterion", marker.args))


def pytest_terminal_summary(terminalreporter):
    titles = {}
    for report in terminalreporter.stats.get("passed", []) + terminalreporter.stats.get("failed", []):
        for name, value in getattr(report, "user_properties", []):
            if name == "criterion":
                titles[value[0]] = value[1]
    if not titles:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(titles):
        ok, detail = _VERDICTS.get(key, (False, "not run"))
        terminalreporter.write_line(
            f"criterion {key} [{'PASS' if ok else 'FAIL'}] {titles[key]}: {detail}")
