import pytest

from wedgeops import load_edge_list
from wedgeops.data import fixture_path


@pytest.fixture(scope="session")
def karate():
    return load_edge_list(fixture_path("karate")).graph


@pytest.fixture(scope="session")
def florentine():
    return load_edge_list(fixture_path("florentine")).graph


@pytest.fixture(scope="session")
def k3():
    return load_edge_list(fixture_path("k3")).graph


@pytest.fixture(scope="session")
def p3():
    return load_edge_list(fixture_path("p3")).graph


@pytest.fixture(scope="session")
def c4_result():
    return load_edge_list(fixture_path("c4"))


@pytest.fixture(scope="session")
def c4(c4_result):
    return c4_result.graph
