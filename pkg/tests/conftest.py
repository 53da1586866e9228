import time

import pytest

from diophantine_adiabatic import ProblemSetup, SweepConfig, parse, run_algorithm

LINEAR_ROOT = "x - 6 = 0"
LINEAR_NO_ROOT = "x + 6 = 0"
CATALAN = "(a+3)^(b+2) - (c+2)^(d+3) = 1"

_criterion_results = {}
_criterion_details = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    failed = report.failed
    if report.when == "call" or failed:
        prev = _criterion_results.get(number, (title, True))
        _criterion_results[number] = (title, prev[1] and not failed and not report.skipped)


def pytest_terminal_summary(terminalreporter):
    if not _criterion_results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criterion_results):
        title, ok = _criterion_results[number]
        line = f"criterion {number:>2} [{'PASS' if ok else 'FAIL'}] {title}"
        if number in _criterion_details:
            line += f" -- {_criterion_details[number]}"
        terminalreporter.write_line(line)


@pytest.fixture
def detail(request):
    """Attach a measured-value note to the current criterion's summary line."""
    number = request.node.get_closest_marker("criterion").args[0]

    def note(text):
        _criterion_details[number] = text
    return note


@pytest.fixture(scope="session")
def linear_root_verdict():
    setup = ProblemSetup(parse(LINEAR_ROOT), 9, 4)
    return setup, run_algorithm(setup, SweepConfig(t_max=100))


@pytest.fixture(scope="session")
def linear_no_root_verdict():
    setup = ProblemSetup(parse(LINEAR_NO_ROOT), 9, 4)
    return setup, run_algorithm(setup, SweepConfig())


@pytest.fixture(scope="session")
def catalan_run():
    """Catalan sweep plus its wall-clock time in seconds."""
    start = time.perf_counter()
    setup = ProblemSetup(parse(CATALAN), 3, 1.6)
    verdict = run_algorithm(setup, SweepConfig(t_max=200))
    return setup, verdict, time.perf_counter() - start


@pytest.fixture(scope="session")
def catalan_verdict(catalan_run):
    return catalan_run[:2]
