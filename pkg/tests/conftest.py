"""
Shared fixtures: small grids and the solutions used across several test modules.
"""

import pytest

from models.grid import GridSpec
from tests.helpers import make_solution


@pytest.fixture
def small_grid():
    return GridSpec(0.5, 1.5, 5, -2.0, 2.0, 9)


@pytest.fixture
def gaussian_source():
    """Shifted Gaussian-source solution of the first surface figure."""
    return make_solution("F6", "shifted", {"t0": 0.1}, A=0.0, R=1.5, S=3.0, d=1.0)


@pytest.fixture
def conditional_special():
    """Special equal-diffusion conditional solution, S = R = 2, C = -0.25."""
    return make_solution("F8", "special", {"C": -0.25}, A=0.0, R=2.0, S=2.0, d=1.0)


@pytest.fixture
def steady_state():
    return make_solution("steady", A=1.0, R=2.0, S=1.0, d=1.0)
