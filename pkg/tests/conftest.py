import pytest

from hslbound.semigroups import build

WEDGE_GENS = ((5, 1), (4, 1), (1, 3), (1, 4))
INDEX2_GENS = ((2, 0), (1, 1), (1, 2))  # one facet lattice has index 2


@pytest.fixture(scope="session")
def wedge():
    return build(WEDGE_GENS)


@pytest.fixture(scope="session")
def index2():
    return build(INDEX2_GENS)


@pytest.fixture(scope="session")
def ns35():
    return build(((3,), (5,)))


@pytest.fixture(scope="session")
def ns23():
    return build(((2,), (3,)))


@pytest.fixture(scope="session")
def ns479():
    return build(((4,), (7,), (9,)))
