import pytest

from quartic_acm import DivisorClass, PolarizedK3Lattice
from quartic_acm.catalog import builtin


@pytest.fixture(scope="session")
def rank1():
    return builtin("rank1")


@pytest.fixture(scope="session")
def line():
    return builtin("line")


@pytest.fixture(scope="session")
def conic():
    return builtin("conic")


@pytest.fixture(scope="session")
def cubic():
    return builtin("cubic")


@pytest.fixture(scope="session")
def gen6():
    return builtin("gen6")


@pytest.fixture(scope="session")
def quartel():
    return builtin("quartel")


@pytest.fixture(scope="session")
def catalog(rank1, line, conic, cubic, gen6, quartel):
    return (rank1, line, conic, cubic, gen6, quartel)


@pytest.fixture(scope="session")
def rank2_catalog(line, conic, cubic, gen6, quartel):
    return (line, conic, cubic, gen6, quartel)


@pytest.fixture(scope="session")
def rank3():
    # Admissible rank-3 lattice carrying a root of degree exactly 3.
    return PolarizedK3Lattice(
        gram=((4, 3, 0), (3, -2, 0), (0, 0, -6)),
        polarization=DivisorClass((1, 0, 0)),
        name="rank3",
    )


@pytest.fixture(scope="session")
def twin_roots():
    # Admissible rank-3 lattice with two orthogonal degree-1 roots; carries
    # an effective class of square 4 and degree 6 whose shifts stay effective,
    # exercising the emptiness-violated branch of the classifier.
    return PolarizedK3Lattice(
        gram=((4, 1, 1), (1, -2, 0), (1, 0, -2)),
        polarization=DivisorClass((1, 0, 0)),
        name="twin_roots",
    )
