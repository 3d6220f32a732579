import random

import pytest
from hypothesis import HealthCheck, settings

from ewkernel.cosmos import QQ, Field, Mor, Obj
from ewkernel.modules import RightModule
from ewkernel.monoids import builtin_algebra

settings.register_profile(
    "default",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture
def D():
    return builtin_algebra("dual_numbers")


@pytest.fixture
def k_over_D(D):
    """The residue field of the dual numbers: ``t`` acts by zero."""
    return RightModule(D, Obj(1), Mor.from_rows([[1, 0]]), "k")


F5 = Field(5)
