"""The worked-example geodesic and a surface containing it.

The curve ``(x, (x - sin x cos x)/4, (sin^2 x - x^2)/4)`` has curvature
``sin x`` and lies on the ruled surface below as its ``v = 0`` section.
"""
from __future__ import annotations

import numpy as np


def example_curve(x):
    x = np.asarray(x, dtype=float)
    s, c = np.sin(x), np.cos(x)
    return np.stack([x, (x - s * c) / 4.0, (s**2 - x**2) / 4.0], axis=-1)


def example_surface(u, v):
    u = np.asarray(u, dtype=float)
    w = u + np.asarray(v, dtype=float)
    s, c = np.sin(w), np.cos(w)
    return np.stack([w, (u - s * c) / 4.0, (s**2 - u**2) / 4.0], axis=-1)


def surface_mesh(u_range=(0.0, 3.0), v_range=(-1.0, 1.0), nu: int = 101, nv: int = 101) -> np.ndarray:
    """Rows ``(u, v, x, y, z)``, ``u`` major."""
    u = np.linspace(*u_range, nu)
    v = np.linspace(*v_range, nv)
    uu, vv = np.meshgrid(u, v, indexing="ij")
    pts = example_surface(uu, vv)
    return np.column_stack([uu.ravel(), vv.ravel(), pts.reshape(-1, 3)])
