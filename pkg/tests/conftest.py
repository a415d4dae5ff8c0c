from __future__ import annotations

import pytest

from ternlrc.code import LinearCode
from ternlrc.constructions import table_specs

# criterion number -> {"title", "nodeids", "outcomes"}
_criteria: dict[int, dict] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    for number, entry in _criteria.items():
        if report.nodeid in entry["nodeids"]:
            entry["outcomes"].append(report.outcome)


def pytest_itemcollected(item):
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        number, title = mark.args
        entry = _criteria.setdefault(number, {"title": title, "nodeids": set(), "outcomes": []})
        entry["nodeids"].add(item.nodeid)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        outcomes = entry["outcomes"]
        if not outcomes:
            status = "NOT RUN"
        elif all(o == "passed" for o in outcomes):
            status = "PASS"
        else:
            status = "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status}  {entry['title']}")


@pytest.fixture(scope="session")
def constructed_codes() -> list[tuple[str, LinearCode]]:
    return [(s.label(), s.build()) for s in table_specs()]

