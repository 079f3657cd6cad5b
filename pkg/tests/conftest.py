import mpmath
import pytest

mpmath.mp.dps = 50


def mp_coth(x):
    return float(mpmath.coth(mpmath.mpf(x)))


def mp_csch(x):
    return float(mpmath.csch(mpmath.mpf(x)))


@pytest.fixture
def natural():
    from thermal_vacuum import ThermalContext

    return ThermalContext.from_temperature(0.0)
