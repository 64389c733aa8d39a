import pytest

from rackbench import fixtures

_CRITERION = {}
_ACCEPTANCE = {}


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            _CRITERION[item.nodeid] = mark.args[0]


def pytest_runtest_logreport(report):
    if report.nodeid not in _CRITERION:
        return
    if report.when == "call" or report.outcome != "passed":
        _ACCEPTANCE.setdefault(report.nodeid, report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    by_criterion = {}
    for nodeid, outcome in _ACCEPTANCE.items():
        by_criterion.setdefault(_CRITERION[nodeid], []).append((nodeid.split("::", 1)[1], outcome))
    for number in sorted(by_criterion):
        checks = by_criterion[number]
        ok = all(outcome == "passed" for _, outcome in checks)
        passed = sum(outcome == "passed" for _, outcome in checks)
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {number}  ({passed}/{len(checks)} checks)")
        for name, outcome in checks:
            if outcome != "passed":
                terminalreporter.write_line(f"        failed: {name}")


@pytest.fixture
def non_rack_3():
    return fixtures.non_rack_3()


@pytest.fixture
def kei_3():
    return fixtures.kei_3()


@pytest.fixture
def twisted_3():
    return fixtures.twisted_3()


@pytest.fixture
def cyclic_rack_3():
    return fixtures.cyclic_rack_3()


@pytest.fixture
def square_4():
    return fixtures.square_4()


@pytest.fixture
def quandle_5():
    return fixtures.quandle_5()
