import pytest

from branchkit.quaternionic import quaternionic_context
from branchkit.specialcases import sp1q_context


@pytest.fixture(scope="session")
def g2():
    return quaternionic_context("g2_2")


@pytest.fixture(scope="session")
def su22():
    return quaternionic_context("su2_n:2")


@pytest.fixture(scope="session")
def su23():
    return quaternionic_context("su2_n:3")


@pytest.fixture(scope="session")
def so44():
    return quaternionic_context("so4_n:4")


@pytest.fixture(scope="session")
def f44():
    return quaternionic_context("f4_4")


@pytest.fixture(scope="session")
def sp12():
    return sp1q_context(2)


@pytest.fixture(scope="session")
def sp13():
    return sp1q_context(3)
