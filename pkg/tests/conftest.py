import math

import pytest

from galcurve.numerics import Grid
from galcurve.synthesis import CurvatureProfile

# (kappa_g, kappa_n, tau_g) profiles used by the round-trip checks
ROUNDTRIP_PROFILES = [
    ("0", "2", "3"),
    ("3", "4", "1"),
    ("cos(x)", "sin(x)", "1"),
    ("0", "sin(x)", "1"),
    ("x", "1", "2"),
]


def make_profile(kg, kn, tg, a=0.1, b=3.0, n=1000, **kw):
    return CurvatureProfile.from_strings(kg, kn, tg, Grid(a, b, n), **kw)


@pytest.fixture
def example_grid():
    """Grid of the worked example: [0.1, 3] with h = 1e-3."""
    return Grid(0.1, 3.0, 2900)


@pytest.fixture
def pi_grid():
    return Grid(0.0, math.pi, 1024)
