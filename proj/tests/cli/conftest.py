import pathlib

import pytest


def pytest_addoption(parser):
    parser.addoption("--cli", required=True)
    parser.addoption("--schemas", required=True)


@pytest.fixture(scope="session")
def cli(request):
    return str(pathlib.Path(request.config.getoption("--cli")).resolve())


@pytest.fixture(scope="session")
def schemas(request):
    return pathlib.Path(request.config.getoption("--schemas")).resolve()
