import pytest

from metro_graph import load_zones123


@pytest.fixture(scope="session")
def zones123():
    return load_zones123()
