import mpmath
import pytest
from hypothesis import HealthCheck, settings

from hzeta import PrecisionContext

mpmath.mp.dps = 40

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture
def ctx():
    return PrecisionContext()


@pytest.fixture
def high_ctx():
    return PrecisionContext.for_mode("high")
