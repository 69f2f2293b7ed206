from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from qgrowth import AoF, AuF, SqU2

# Property tests run 1000 derandomized cases each; see test_properties.py.
settings.register_profile('qgrowth', derandomize=True, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large])
settings.load_profile('qgrowth')


@pytest.fixture
def sq_half():
    return SqU2(0.5)


@pytest.fixture
def ao_vv():
    """A_o(F) with F*F = diag(0.5, 1, 2)."""
    return AoF([0.5, 1.0, 2.0])


@pytest.fixture
def au3():
    return AuF([1.0, 1.0, 1.0])
