import pytest

from triconic.catalog import known_arrangements
from triconic.field import FieldContext


@pytest.fixture(scope="session")
def ctxq():
    return FieldContext(1)


@pytest.fixture(scope="session")
def ctx3():
    return FieldContext(-3)


@pytest.fixture(scope="session")
def fixtures():
    return {name: arr for name, arr, _ in known_arrangements()}


@pytest.fixture(scope="session")
def persson(fixtures):
    return fixtures["Persson"]


@pytest.fixture(scope="session")
def pokora(fixtures):
    return fixtures["Pokora"]


@pytest.fixture(scope="session")
def example2(fixtures):
    return fixtures["Example2"]
