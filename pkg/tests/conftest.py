from __future__ import annotations

_DOCS: dict[str, str] = {}
_RESULTS: dict[str, str] = {}


def _is_criterion(nodeid: str) -> bool:
    return "test_acceptance.py::test_criterion_" in nodeid


def pytest_collection_modifyitems(items):
    for item in items:
        if _is_criterion(item.nodeid):
            doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
            _DOCS[item.nodeid] = doc


def pytest_runtest_logreport(report):
    if not _is_criterion(report.nodeid):
        return
    if report.failed:
        _RESULTS[report.nodeid] = "FAIL"
    elif report.when == "call" and report.nodeid not in _RESULTS:
        _RESULTS[report.nodeid] = "PASS"
    elif report.skipped:
        _RESULTS.setdefault(report.nodeid, "SKIP")


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid in sorted(_RESULTS):
        name = nodeid.split("::")[-1]
        terminalreporter.write_line(f"{_RESULTS[nodeid]:4}  {name}: {_DOCS.get(nodeid, '')}")
