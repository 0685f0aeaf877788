from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

from splitspin import Field

settings.register_profile(
    "exact",
    deadline=None,
    max_examples=50,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")


@pytest.fixture(scope="session")
def QQ():
    return Field.rationals()


@pytest.fixture(scope="session")
def F5():
    return Field.prime(5)


@pytest.fixture(scope="session")
def F7():
    return Field.prime(7)


def frac(a, b=1):
    return Fraction(a, b)
