import pytest

from listrec import make_field


@pytest.fixture
def f4():
    return make_field(2, 2)


@pytest.fixture
def f5():
    return make_field(5)
