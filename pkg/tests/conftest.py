import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "repo", max_examples=30, deadline=None, suppress_health_check=[HealthCheck.too_slow], derandomize=True
)
settings.load_profile("repo")


@pytest.fixture
def qq_xyz():
    from oideal import Field, PolyRing

    return PolyRing(["x", "y", "z"], Field(0))


@pytest.fixture
def qq_xy():
    from oideal import Field, PolyRing

    return PolyRing(["x", "y"], Field(0))


@pytest.fixture
def qq_abcd():
    from oideal import Field, PolyRing

    return PolyRing(["a", "b", "c", "d"], Field(0))
