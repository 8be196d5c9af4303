import pytest

from qe7 import e7_delpezzo as e7
from qe7.verify import sp6_catalog


@pytest.fixture(scope="session")
def sp6():
    """Closure of the seven diagram transvections (1,451,520 elements)."""
    return sp6_catalog()


@pytest.fixture(scope="session")
def weyl():
    """Closure of the seven simple reflections (2,903,040 elements)."""
    return e7.weyl_group()
