import pytest

from mdscosets import build_code, census, make_params


@pytest.fixture(scope="session")
def flagship_params():
    """The [6, 2, 5] code over GF(5), small enough to enumerate instantly."""
    return make_params(6, 2, 5)


@pytest.fixture(scope="session")
def flagship_code(flagship_params):
    return build_code(flagship_params)


@pytest.fixture(scope="session")
def flagship_census(flagship_code):
    return census(flagship_code)
