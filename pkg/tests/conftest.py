import pytest

from quadspec import critical_table


@pytest.fixture(scope="session")
def table5():
    """The ten-row critical table, computed once for the whole run."""
    return critical_table(5)
