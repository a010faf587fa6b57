import pytest

from octarray import serialize
from octarray.fixtures import load_fixture


@pytest.fixture(scope="session")
def f1():
    return load_fixture("f1")


@pytest.fixture(scope="session")
def f2():
    return load_fixture("f2")


@pytest.fixture(scope="session")
def f3():
    return load_fixture("f3")


@pytest.fixture(scope="session")
def f4():
    return load_fixture("f4")


@pytest.fixture(scope="session")
def f1_array(f1):
    return serialize.decode(f1["array"])


@pytest.fixture(scope="session")
def f2_array(f2):
    return serialize.decode(f2["array"])


@pytest.fixture(scope="session")
def f3_pair(f3):
    return serialize.decode(f3["pair"])


@pytest.fixture(scope="session")
def f4_triangle(f4):
    return serialize.decode(f4["triangle"])
