import pytest

from latuni.fixtures import l1, l2, l3, chain, diamond, m3, n5


@pytest.fixture(scope="session")
def fx_l1():
    return l1()


@pytest.fixture(scope="session")
def fx_l2():
    return l2()


@pytest.fixture(scope="session")
def fx_l3():
    return l3()


@pytest.fixture(scope="session")
def small_lattices():
    return {
        "chain3": chain(3),
        "chain4": chain(4),
        "chain5": chain(5),
        "m2": diamond(),
        "m3": m3(),
        "n5": n5(),
    }
