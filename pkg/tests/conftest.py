import os
import sys
import time
from dataclasses import dataclass

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from coxrigid.enumeration import EnumerationConfig, enumerate_graphs

ACCEPTANCE_LINES: list[str] = []


@dataclass
class GraphSpace:
    graphs: list
    seconds: float

    def __iter__(self):
        return iter(self.graphs)


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("COXRIGID_CACHE_DIR", str(tmp_path / "cache"))


@pytest.fixture(scope="session")
def connected5():
    """Every connected graph with at most 5 vertices and labels at most 5."""
    t = time.perf_counter()
    graphs = list(enumerate_graphs(EnumerationConfig(5, 5, connected_only=True)))
    return GraphSpace(graphs, time.perf_counter() - t)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
