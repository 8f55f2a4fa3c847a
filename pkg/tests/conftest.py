import functools

import pytest

from mngroups.builtins import CATALOG
from mngroups.groupspec import parse_group_spec

_acceptance: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        _acceptance[number] = ("PASS" if rep.passed else "FAIL", title)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        status, title = _acceptance[number]
        terminalreporter.write_line(f"{status}  criterion {number:>2}: {title}")


@functools.lru_cache(maxsize=None)
def catalog_group(spec: str):
    return parse_group_spec(spec)


@pytest.fixture(scope="session")
def catalog():
    return [(spec, catalog_group(spec)) for spec in CATALOG]
