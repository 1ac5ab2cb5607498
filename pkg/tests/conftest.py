import pytest

from perhall import category


@pytest.fixture
def a1():
    return category("A1", 2)


@pytest.fixture
def a1q3():
    return category("A1", 3)


@pytest.fixture
def a2():
    return category("A2", 2)


@pytest.fixture
def F(a1):
    return a1.classes((1,))[0]
