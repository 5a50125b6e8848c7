"""Uniform grids, cumulative quadrature and finite-difference stencils.

Every nested integral of the synthesis code is evaluated on one shared
uniform grid, so inner antiderivatives are sampled exactly where the
outer integrands need them and no interpolation is ever required.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import symexpr

#: default resolution: h <= 1e-3 (b - a)
DEFAULT_INTERVALS = 1000
MIN_INTERVALS = 8


class GridError(ValueError):
    pass


@dataclass(frozen=True)
class Grid:
    a: float
    b: float
    n: int

    def __post_init__(self):
        if not (math.isfinite(self.a) and math.isfinite(self.b)) or not self.a < self.b:
            raise GridError(f"grid needs finite a < b, got [{self.a}, {self.b}]")
        if self.n < MIN_INTERVALS or self.n % 2:
            raise GridError(f"grid needs an even number of intervals >= {MIN_INTERVALS}, got {self.n}")

    @property
    def h(self) -> float:
        return (self.b - self.a) / self.n

    @property
    def x(self) -> np.ndarray:
        return self.a + self.h * np.arange(self.n + 1)

    def __len__(self) -> int:
        return self.n + 1

    @classmethod
    def from_step(cls, a: float, b: float, step: float) -> Grid:
        """Finest admissible grid whose step does not exceed ``step``."""
        if not step > 0:
            raise GridError(f"step must be positive, got {step}")
        n = max(MIN_INTERVALS, math.ceil((b - a) / step - 1e-9))
        return cls(a, b, n + n % 2)

    def refined(self, factor: int = 2) -> Grid:
        return Grid(self.a, self.b, self.n * factor)


@dataclass(frozen=True)
class SampledFn:
    grid: Grid
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.shape != (self.grid.n + 1,):
            raise ValueError(f"expected {self.grid.n + 1} samples, got shape {values.shape}")
        if not np.all(np.isfinite(values)):
            raise ValueError("samples must be finite")
        object.__setattr__(self, "values", values)

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.values, dtype=dtype)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, k):
        return self.values[k]


def sample(expr, grid: Grid) -> SampledFn:
    """Evaluate an expression (or its source string) on every grid node."""
    return SampledFn(grid, symexpr.evaluate(expr, grid.x))


def cumulative_integral(f: SampledFn) -> SampledFn:
    """Running integral ``F(x_k) = int_a^{x_k} f`` with ``F(a) = 0``.

    Even nodes use composite Simpson.  An odd node steps one interval
    past the preceding even node with the trapezoid rule plus a
    third-difference correction (the exact integral of the cubic through
    four neighbouring samples), so odd and even nodes carry errors of the
    same order and the result has no odd/even sawtooth.
    """
    h = f.grid.h
    y = f.values
    n = f.grid.n
    out = np.zeros(n + 1)

    panels = h / 3.0 * (y[0:-2:2] + 4.0 * y[1:-1:2] + y[2::2])
    out[2::2] = np.cumsum(panels)

    # forward cubic over nodes 2m..2m+3 where available
    m = np.arange(0, n - 2, 2)
    fwd = h / 24.0 * (9.0 * y[m] + 19.0 * y[m + 1] - 5.0 * y[m + 2] + y[m + 3])
    out[m + 1] = out[m] + fwd
    # last odd node: backward cubic over nodes n-3..n
    k = n - 2
    out[n - 1] = out[k] + h / 24.0 * (-y[k - 1] + 13.0 * y[k] + 13.0 * y[k + 1] - y[k + 2])
    return SampledFn(f.grid, out)


@lru_cache(maxsize=None)
def fd_weights(offsets: tuple[int, ...], order: int) -> tuple[float, ...]:
    """Finite-difference weights for the given integer offsets (Fornberg).

    Computed in exact rational arithmetic, then rounded once.
    """
    z = [Fraction(o) for o in offsets]
    n = len(z)
    c = [[Fraction(0)] * (order + 1) for _ in range(n)]
    c[0][0] = Fraction(1)
    c1 = Fraction(1)
    c4 = z[0]
    for i in range(1, n):
        mn = min(i, order)
        c2 = Fraction(1)
        c5, c4 = c4, z[i]
        for j in range(i):
            c3 = z[i] - z[j]
            c2 *= c3
            if j == i - 1:
                for k in range(mn, 0, -1):
                    c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2
            for k in range(mn, 0, -1):
                c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3
            c[j][0] = c4 * c[j][0] / c3
        c1 = c2
    return tuple(float(c[i][order]) for i in range(n))


def _apply(values: np.ndarray, k: int, offsets: tuple[int, ...], weights: tuple[float, ...]) -> float:
    base = values[k]
    # differences against the centre node make constants exact zeros
    return sum(w * (values[k + o] - base) for o, w in zip(offsets, weights) if o != 0)


def derivative(f: SampledFn, order: int = 1, accuracy: int = 2) -> SampledFn:
    """Finite-difference derivative of sampled data.

    Central stencils in the interior; near the two ends, where the
    central stencil does not fit, one-sided stencils of the same formal
    accuracy.  ``accuracy=2`` is the plain second-order scheme.
    """
    if order not in (1, 2, 3):
        raise ValueError(f"derivative order must be 1, 2 or 3, got {order}")
    if accuracy not in (2, 4):
        raise ValueError(f"accuracy must be 2 or 4, got {accuracy}")
    y = f.values
    N = len(y)
    h = f.grid.h
    half = (order + 1) // 2 - 1 + accuracy // 2
    central = tuple(range(-half, half + 1))
    cw = fd_weights(central, order)

    out = np.zeros(N)
    lo, hi = half, N - half
    for o, w in zip(central, cw):
        if o:
            out[lo:hi] += w * (y[lo + o:hi + o] - y[lo:hi])

    width = order + accuracy
    for k in list(range(0, lo)) + list(range(hi, N)):
        start = 0 if k < lo else N - width
        offsets = tuple(range(start - k, start - k + width))
        out[k] = _apply(y, k, offsets, fd_weights(offsets, order))
    return SampledFn(f.grid, out / h**order)
