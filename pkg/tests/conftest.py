import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from pointtopo import make_shape, reflexive_transitive_closure, topology_from_preorder  # noqa: E402

FIG5_LABELS = ["p1", "p2", "p3", "p4", "p5", "p6"]
FIG5_COVERS = [("p4", "p6"), ("p4", "p3"), ("p6", "p5"), ("p3", "p1"), ("p1", "p2"), ("p5", "p2")]


@pytest.fixture
def fig5_shape():
    return make_shape(FIG5_LABELS)


@pytest.fixture
def fig5_preorder(fig5_shape):
    return reflexive_transitive_closure(fig5_shape, FIG5_COVERS)


@pytest.fixture
def fig5_topology(fig5_preorder):
    return topology_from_preorder(fig5_preorder)


_criteria = {}


def pytest_runtest_logreport(report):
    crit = dict(report.user_properties).get("criterion")
    if crit is None:
        return
    if report.when == "call" or report.outcome != "passed":
        prev = _criteria.get(crit, "PASS")
        _criteria[crit] = "PASS" if prev == "PASS" and report.outcome == "passed" else "FAIL"


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            item.user_properties.append(("criterion", m.args[0]))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(_criteria):
        terminalreporter.write_line(f"criterion {crit}: {_criteria[crit]}")
