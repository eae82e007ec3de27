from __future__ import annotations

import os

import pytest

from crcodes.data import load_matrix
from crcodes.graph_core import syndrome_graph


def pytest_addoption(parser):
    parser.addoption("--heavy", action="store_true", help="run the long classification tests")


def heavy_enabled(config) -> bool:
    return config.getoption("--heavy") or os.environ.get("CRCODES_HEAVY", "").lower() in ("1", "true", "yes")


def pytest_collection_modifyitems(config, items):
    if heavy_enabled(config):
        return
    skip = pytest.mark.skip(reason="heavy: pass --heavy or set CRCODES_HEAVY=1")
    for item in items:
        if "heavy" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def graph():
    cache = {}

    def get(name: str):
        if name not in cache:
            cache[name] = syndrome_graph(load_matrix(name))
        return cache[name]

    return get


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
