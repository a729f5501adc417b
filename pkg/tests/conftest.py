from functools import lru_cache

import pytest
from hypothesis import settings

from munarini import graphs as gr
from munarini import hypercube_analysis as ha

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


@lru_cache(maxsize=None)
def _build(family, n, k):
    return gr.build(family, n, k)


@lru_cache(maxsize=None)
def _embedded(family, n, k):
    G = _build(family, n, k)
    if family == "genpell":
        return ha.embed_partial_cube(G)
    return ha.embed(G)


@pytest.fixture(scope="session")
def build():
    return _build


@pytest.fixture(scope="session")
def embedded():
    return _embedded


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
