import pytest

from koshzeta.ctx import make_context


@pytest.fixture(scope="session")
def ctx30():
    return make_context(30)


@pytest.fixture(scope="session")
def ctx15():
    return make_context(15)
