"""Closed forms of the special curve families.

Each function returns ``(y, z)`` sampled on a grid for the displayed
family, with the family's free constants as keyword arguments.  The
forms that still contain integrals are evaluated from their own explicit
integrands (``sin(d x + d1)`` etc.), not through the turning-angle
pipeline of :mod:`galcurve.synthesis`, so they serve as an independent
check on it.  Repeated integrals run from the left end of the grid.
"""
from __future__ import annotations

import numpy as np

from .numerics import Grid, SampledFn, cumulative_integral, sample


def _int(values, g: Grid) -> np.ndarray:
    return cumulative_integral(SampledFn(g, values)).values


def _int2(values, g: Grid) -> np.ndarray:
    return _int(_int(values, g), g)


# geodesics (kappa_g = 0)

def geodesic_circular_helix(g: Grid, e: float, c: float, c1=0.0, e1=0.0, e2=0.0, e3=0.0,
                            f1=0.0, f2=0.0, f3=0.0):
    x = g.x
    y = -e / c**2 * np.cos(c * x + c1) + e1 * x**2 + e2 * x + e3
    z = e / c**2 * np.sin(c * x + c1) + f1 * x**2 + f2 * x + f3
    return y, z


def geodesic_generalized_helix(g: Grid, kappa_n, d: float, d1=0.0, d2=0.0):
    kn = sample(kappa_n, g).values
    phase = d * _int(kn, g)
    return _int2(kn * (np.cos(phase) + d1), g), -_int2(kn * (np.sin(phase) + d2), g)


def geodesic_salkowski(g: Grid, m: float, tau_g, m1=0.0, m2=0.0):
    t = _int(sample(tau_g, g).values, g)
    return m * _int2(np.cos(t) + m1, g), -m * _int2(np.sin(t) + m2, g)


def geodesic_anti_salkowski(g: Grid, kappa_n, b: float, b1=0.0, b2=0.0, b3=0.0):
    kn = sample(kappa_n, g).values
    x = g.x
    return _int2(kn * (np.cos(b * x + b1) + b2), g), -_int2(kn * (np.sin(b * x + b1) + b3), g)


# asymptotic lines (kappa_n = 0)

def asymptotic_circular_helix(g: Grid, e: float, c: float, c1=0.0, c2=0.0, c3=0.0, c4=0.0, c5=0.0):
    x = g.x
    y = -e / c**2 * np.sin(c * x + c1) + c2 * x + c3
    z = -e / c**2 * np.cos(c * x + c1) + c4 * x + c5
    return y, z


def asymptotic_generalized_helix(g: Grid, kappa_g, k: float, k1=0.0, k2=0.0, k3=0.0, k4=0.0):
    if k == 0:
        raise ValueError("generalized-helix constant k must be nonzero")
    x = g.x
    phase = k * _int(sample(kappa_g, g).values, g)
    y = -_int(np.cos(phase), g) / k + k1 * x + k2
    z = _int(np.sin(phase), g) / k + k3 * x + k4
    return y, z


def asymptotic_salkowski(g: Grid, e: float, tau_g):
    t = _int(sample(tau_g, g).values, g)
    return _int2(e * np.sin(t), g), _int2(e * np.cos(t), g)


def asymptotic_anti_salkowski(g: Grid, kappa_g, d: float, d1=0.0):
    kg = sample(kappa_g, g).values
    x = g.x
    return _int2(kg * np.sin(d * x + d1), g), _int2(kg * np.cos(d * x + d1), g)


# lines of curvature (tau_g = 0)

def line_of_curvature_parabola(g: Grid, a1=0.0, a2=0.0, a3=0.0, b1=0.0, b2=0.0, b3=0.0):
    """Constant kappa_g and kappa_n: both coordinates are quadratics."""
    x = g.x
    return a1 * x**2 + a2 * x + a3, b1 * x**2 + b2 * x + b3
