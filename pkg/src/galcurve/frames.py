"""Frenet and Darboux apparatus of sampled admissible curves.

An admissible curve has the form ``(x, y(x), z(x))``; its first coordinate
is the parameter itself, so the tangent is ``(1, y', z')`` with an exact
first component and every derivative of order two or more is isotropic.
Derived vectors are therefore assembled with a literal 0 or 1 in the
first slot instead of differentiating the first coordinate numerically.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import symexpr
from .numerics import Grid, SampledFn, derivative
from .vectors import cross_g_rows, dot_g_rows, isotropic_rows, norm_g_rows

KAPPA_MIN = 1e-8
UNIT_TOL = 1e-10

# Stencil accuracy for derivatives of sampled curves.  Third derivatives
# stay second order: higher-order third-derivative stencils amplify the
# rounding noise of the samples more than they cut truncation error.
FIRST_ACCURACY = 4
SECOND_ACCURACY = 4
THIRD_ACCURACY = 2


class DegenerateCurvatureError(ValueError):
    def __init__(self, nodes, kappa_min: float):
        self.nodes = list(nodes)
        shown = ", ".join(str(k) for k in self.nodes[:20])
        more = "" if len(self.nodes) <= 20 else f", ... ({len(self.nodes)} nodes)"
        super().__init__(f"curvature <= {kappa_min:g} at grid nodes {shown}{more}")


class NormalFieldError(ValueError):
    pass


@dataclass(frozen=True)
class SampledCurve:
    grid: Grid
    points: np.ndarray
    admissible: bool = True

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.shape != (self.grid.n + 1, 3):
            raise ValueError(f"expected ({self.grid.n + 1}, 3) points, got {pts.shape}")
        object.__setattr__(self, "points", pts)
        scale = max(1.0, abs(self.grid.a), abs(self.grid.b))
        ok = bool(np.all(np.abs(pts[:, 0] - self.grid.x) <= 1e-12 * scale))
        object.__setattr__(self, "admissible", ok)

    @classmethod
    def from_components(cls, grid: Grid, y, z) -> SampledCurve:
        pts = np.column_stack([grid.x, np.asarray(y, dtype=float), np.asarray(z, dtype=float)])
        return cls(grid, pts)

    @property
    def x(self) -> np.ndarray:
        return self.points[:, 0]

    @property
    def y(self) -> SampledFn:
        return SampledFn(self.grid, self.points[:, 1])

    @property
    def z(self) -> SampledFn:
        return SampledFn(self.grid, self.points[:, 2])


@dataclass(frozen=True)
class FrenetApparatus:
    T: np.ndarray
    N: np.ndarray
    B: np.ndarray
    kappa: np.ndarray
    tau: np.ndarray


@dataclass(frozen=True)
class DarbouxApparatus:
    T: np.ndarray
    Q: np.ndarray
    n: np.ndarray
    kappa_g: np.ndarray
    kappa_n: np.ndarray
    tau_g: np.ndarray


def _require_admissible(c: SampledCurve):
    if not c.admissible:
        raise ValueError("curve is not admissible: first coordinate must equal the grid parameter")


def _isotropic(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.column_stack([np.zeros(len(a)), a, b])


def tangent(c: SampledCurve) -> np.ndarray:
    _require_admissible(c)
    dy = derivative(c.y, 1, FIRST_ACCURACY).values
    dz = derivative(c.z, 1, FIRST_ACCURACY).values
    return np.column_stack([np.ones(len(dy)), dy, dz])


def second_derivative(c: SampledCurve) -> np.ndarray:
    _require_admissible(c)
    return _isotropic(derivative(c.y, 2, SECOND_ACCURACY).values,
                      derivative(c.z, 2, SECOND_ACCURACY).values)


def frenet_apparatus(c: SampledCurve, kappa_min: float = KAPPA_MIN, strict: bool = True) -> FrenetApparatus:
    """Tangent, principal normal, binormal, curvature and torsion.

    With ``strict`` a node where the curvature does not exceed
    ``kappa_min`` raises :class:`DegenerateCurvatureError`; otherwise N, B
    and the torsion are NaN there.
    """
    T = tangent(c)
    acc = second_derivative(c)
    y3 = derivative(c.y, 3, THIRD_ACCURACY).values
    z3 = derivative(c.z, 3, THIRD_ACCURACY).values
    y2, z2 = acc[:, 1], acc[:, 2]
    kappa = norm_g_rows(acc)

    bad = kappa <= kappa_min
    if strict and np.any(bad):
        raise DegenerateCurvatureError(np.flatnonzero(bad), kappa_min)
    with np.errstate(divide="ignore", invalid="ignore"):
        safe = np.where(bad, np.nan, kappa)
        N = _isotropic(y2 / safe, z2 / safe)
        B = _isotropic(-z2 / safe, y2 / safe)
        tau = (y2 * z3 - z2 * y3) / safe**2
    return FrenetApparatus(T, N, B, kappa, tau)


def _check_normal(normal: np.ndarray, size: int) -> np.ndarray:
    normal = np.asarray(normal, dtype=float)
    if normal.shape != (size, 3):
        raise NormalFieldError(f"normal field must have shape ({size}, 3), got {normal.shape}")
    if not np.all(isotropic_rows(normal)):
        raise NormalFieldError("surface normal must be isotropic (first component exactly 0)")
    off = np.abs(norm_g_rows(normal) - 1.0)
    if np.any(off > UNIT_TOL):
        k = int(np.argmax(off))
        raise NormalFieldError(f"surface normal is not a unit vector at node {k} (|n| = {1 + off[k]:.12g})")
    return normal


def darboux_apparatus(c: SampledCurve, normal) -> DarbouxApparatus:
    """Darboux frame and curvatures of ``c`` for a surface normal field.

    ``Q`` is taken as ``T x_G n``, the orientation for which the closed
    forms ``Q = (0, sin t, cos t)``, ``n = (0, cos t, -sin t)`` satisfy
    ``T' = kappa_g Q + kappa_n n`` and ``Q' = tau_g n``.
    """
    T = tangent(c)
    n = _check_normal(normal, len(T))
    Q = cross_g_rows(T, n)
    acc = second_derivative(c)
    kappa_g = dot_g_rows(acc, Q)
    kappa_n = dot_g_rows(acc, n)
    dQ = _isotropic(derivative(SampledFn(c.grid, Q[:, 1]), 1, FIRST_ACCURACY).values,
                    derivative(SampledFn(c.grid, Q[:, 2]), 1, FIRST_ACCURACY).values)
    tau_g = dot_g_rows(dQ, n)
    return DarbouxApparatus(T, Q, n, kappa_g, kappa_n, tau_g)


class DegenerateProfileError(ValueError):
    pass


def kt_relations(p, x):
    """Squared curvature and torsion from geodesic/normal curvature data.

    ``p`` is anything with ``kappa_g``, ``kappa_n`` and ``tau_g``
    expressions.  ``x`` may be a float or an array; the torsion needs
    ``kappa_g^2 + kappa_n^2 > 0`` at every requested point.
    """
    kg, kn, tg = p.kappa_g, p.kappa_n, p.tau_g
    g = symexpr.evaluate(kg, x)
    nrm = symexpr.evaluate(kn, x)
    kappa_sq = g * g + nrm * nrm
    if np.any(np.asarray(kappa_sq) == 0):
        raise DegenerateProfileError("kappa_g^2 + kappa_n^2 vanishes; torsion is undefined")
    dg = symexpr.evaluate(symexpr.diff(kg), x)
    dn = symexpr.evaluate(symexpr.diff(kn), x)
    tau = -symexpr.evaluate(tg, x) + (dg * nrm - g * dn) / kappa_sq
    return kappa_sq, tau
