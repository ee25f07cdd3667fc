from __future__ import annotations

import itertools

import pytest

from wiredcx import corpus
from wiredcx.enumerator import SearchConfig, enumerate_complexes
from wiredcx.graphs import Graph, builtin_graph
from wiredcx.wired import LinkArrangement, flat


def arrangement(*names: str) -> LinkArrangement:
    return LinkArrangement(tuple(builtin_graph(n) for n in names), names)


def k4() -> Graph:
    return Graph.from_edges(4, itertools.combinations(range(4), 2), "k4")


def face_set_key(wc) -> frozenset:
    """Normalized faces as flat tuples, the representation used by the oracles."""
    return frozenset(flat(f) for f in wc.normalized_faces())


@pytest.fixture(scope="session")
def mk16_arr() -> LinkArrangement:
    return arrangement("mk16")


@pytest.fixture(scope="session")
def mk16_census(mk16_arr):
    """The full single-link mk16 search with dedup on."""
    return enumerate_complexes(mk16_arr, SearchConfig(dedup=True))


@pytest.fixture(scope="session")
def mk16_raw(mk16_arr):
    return enumerate_complexes(mk16_arr, SearchConfig(dedup=False))


@pytest.fixture(scope="session")
def v_fixtures():
    return [corpus.load_v(i) for i in range(1, 28)]


@pytest.fixture(scope="session")
def v1(v_fixtures):
    return v_fixtures[0]


# -- acceptance reporting ------------------------------------------------------

ACCEPTANCE_RESULTS: dict[int, tuple[str, str, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_RESULTS):
        verdict, title, detail = ACCEPTANCE_RESULTS[n]
        terminalreporter.write_line(f"criterion {n}: {verdict} - {title} ({detail})")
