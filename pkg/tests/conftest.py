from functools import lru_cache

import pytest

from arcres.design import compatible_family_from_arc, validate_steiner
from arcres.geometry import denniston_arc, plane_for, regular_hyperoval

FANO = [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5)]
AG23 = [(0, 1, 2), (3, 4, 5), (6, 7, 8), (0, 3, 6), (1, 4, 7), (2, 5, 8),
        (0, 4, 8), (1, 5, 6), (2, 3, 7), (0, 5, 7), (1, 3, 8), (2, 4, 6)]


def complete_graph(v):
    return [(i, j) for i in range(v) for j in range(i + 1, v)]


@lru_cache(maxsize=None)
def plane(q):
    return plane_for(q)


@lru_cache(maxsize=None)
def arc(q, k, kind="denniston"):
    P = plane(q)
    if kind == "hyperoval":
        return regular_hyperoval(P)
    return denniston_arc(P, k.bit_length() - 1)


@lru_cache(maxsize=None)
def family(q, k, kind="denniston"):
    A = arc(q, k, kind)
    return tuple(compatible_family_from_arc(A.plane, A))


@pytest.fixture(scope="session")
def k4():
    return validate_steiner(4, complete_graph(4))


@pytest.fixture(scope="session")
def k6():
    return validate_steiner(6, complete_graph(6))


@pytest.fixture(scope="session")
def ag23():
    return validate_steiner(9, AG23)


@pytest.fixture(scope="session")
def fano():
    return validate_steiner(7, FANO, strict=False)


@pytest.fixture(scope="session")
def oval28():
    return arc(8, 4).embedding.design


ACCEPTANCE_LOG: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LOG:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LOG:
            terminalreporter.write_line(line)
