import os
import sys

import pytest
from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", derandomize=True, deadline=None, max_examples=60)
settings.load_profile("default")

LONG = bool(os.environ.get("HORNLAB_LONG"))


def pytest_collection_modifyitems(config, items):
    if LONG:
        return
    skip = pytest.mark.skip(reason="long tier; set HORNLAB_LONG=1")
    for item in items:
        if "long" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def data():
    from hornlab import formats
    from hornlab.cli import fixture_text

    return {
        "t0": formats.parse_indices(fixture_text("t0.idx"))[0],
        "roster": formats.parse_indices(fixture_text("roster.idx")),
        "prop4": formats.parse_indices(fixture_text("prop4.idx")),
        "p": formats.parse_point(fixture_text("p.pt")),
        "p1": formats.parse_point(fixture_text("p1.pt")),
        "p2": formats.parse_point(fixture_text("p2.pt")),
    }


# acceptance summary: one line per criterion, filled in by test_acceptance.py
ACCEPTANCE = {}
CRITERIA = {
    1: "quantum coefficient engine, n <= 6",
    2: "orbit reduction check, n = 2..8",
    3: "t0 spot checks at n = 15",
    4: "exact LP fixture suite",
    5: "Delta containments, n <= 4",
    6: "long tier: n = 15 and n = 16 numbers",
    7: "byte-identical reruns",
}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance")
    for num, label in CRITERIA.items():
        status, detail = ACCEPTANCE.get(num, ("SKIP", "not run"))
        line = f"criterion {num} {status}: {label}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)
