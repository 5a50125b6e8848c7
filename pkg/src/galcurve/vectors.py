"""Vector algebra of the Galilean 3-space G3.

The scalar product is degenerate: it only sees the first coordinate unless
both vectors are isotropic (first coordinate exactly zero), in which case
it is the Euclidean product of the remaining two coordinates.

Besides the scalar :class:`GalVec3` API there are row-wise variants
(``*_rows``) working on ``(N, 3)`` arrays, used by the frame code.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class GalVec3:
    x1: float
    x2: float
    x3: float

    @property
    def isotropic(self) -> bool:
        return self.x1 == 0

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.x1, self.x2, self.x3)

    def __iter__(self):
        return iter(self.as_tuple())

    def __neg__(self) -> GalVec3:
        return GalVec3(-self.x1, -self.x2, -self.x3)


def dot_g(v: GalVec3, w: GalVec3) -> float:
    if v.x1 != 0 or w.x1 != 0:
        return v.x1 * w.x1
    return v.x2 * w.x2 + v.x3 * w.x3


def norm_g(v: GalVec3) -> float:
    return math.sqrt(abs(dot_g(v, v)))


def cross_g(v: GalVec3, w: GalVec3) -> GalVec3:
    # determinant with first row (0, e2, e3)
    return GalVec3(0.0, v.x3 * w.x1 - v.x1 * w.x3, v.x1 * w.x2 - v.x2 * w.x1)


def dot_g_rows(v: np.ndarray, w: np.ndarray) -> np.ndarray:
    """Row-wise scalar product of two ``(N, 3)`` arrays."""
    v = np.asarray(v, dtype=float)
    w = np.asarray(w, dtype=float)
    both_isotropic = (v[:, 0] == 0) & (w[:, 0] == 0)
    euclid = v[:, 1] * w[:, 1] + v[:, 2] * w[:, 2]
    return np.where(both_isotropic, euclid, v[:, 0] * w[:, 0])


def norm_g_rows(v: np.ndarray) -> np.ndarray:
    return np.sqrt(np.abs(dot_g_rows(v, v)))


def cross_g_rows(v: np.ndarray, w: np.ndarray) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    w = np.asarray(w, dtype=float)
    out = np.zeros(np.broadcast_shapes(v.shape, w.shape))
    out[:, 1] = v[:, 2] * w[:, 0] - v[:, 0] * w[:, 2]
    out[:, 2] = v[:, 0] * w[:, 1] - v[:, 1] * w[:, 0]
    return out


def isotropic_rows(v: np.ndarray) -> np.ndarray:
    return np.asarray(v)[:, 0] == 0


def to_rows(vectors) -> np.ndarray:
    return np.array([tuple(v) for v in vectors], dtype=float).reshape(-1, 3)


def from_rows(rows: np.ndarray) -> list[GalVec3]:
    return [GalVec3(float(a), float(b), float(c)) for a, b, c in np.asarray(rows)]
