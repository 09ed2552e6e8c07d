import pytest

from ybegarside import build_germ, load_solution
from ybegarside.cli import fixture_path


def load(name):
    return load_solution(fixture_path(name).read_text())


def w(*letters):
    """1-based letters, as written in the literature, to a 0-based word."""
    return tuple(x - 1 for x in letters)


@pytest.fixture(scope="session")
def ex15():
    return load("example15")


@pytest.fixture(scope="session")
def p3():
    return load("p3")


@pytest.fixture(scope="session", params=[1, 2, 3], ids=lambda n: f"trivial{n}")
def trivial(request):
    return load(f"trivial{request.param}")


@pytest.fixture(scope="session")
def ex15_germ(ex15):
    return build_germ(ex15)


@pytest.fixture(scope="session")
def p3_germ(p3):
    return build_germ(p3)
