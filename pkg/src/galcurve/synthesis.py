"""Curves on surfaces rebuilt from geodesic curvature, normal curvature and
geodesic torsion.

Two constructions are provided:

* the natural representation: ``y`` and ``z`` are three nested integrals
  of the curvature data, with ``Q = (0, S, C)`` and ``n = (0, C, -S)``
  where ``C, S`` are the cosine and sine of the turning angle
  ``t = int tau_g``;
* the Darboux-frame coefficients ``beta = l1 T + l2 Q + l3 n``, which
  divide by ``tau_g``.

Integration conventions
-----------------------
Outer integrals run from the left end ``a`` of the grid, so synthesized
curves agree with textbook closed forms up to affine terms in ``y`` and
``z``.  The turning angle is the antiderivative of ``tau_g`` vanishing at
``angle_origin`` (``x = 0`` unless set), which is the antiderivative that
``sin x``/``cos x`` style closed forms use.  The innermost integrals
``int tau_g S`` and ``int tau_g C`` take the constants that make
``-int tau_g Q = n`` hold exactly; any other choice adds a spurious
``x^2`` term and changes the normal curvature of the result.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import symexpr
from .frames import SampledCurve
from .numerics import Grid, SampledFn, cumulative_integral, derivative, sample

SINGULAR_TORSION = 1e-10


class SingularTorsionError(ValueError):
    pass


@dataclass(frozen=True)
class CurvatureProfile:
    kappa_g: symexpr.Expr
    kappa_n: symexpr.Expr
    tau_g: symexpr.Expr
    domain: Grid
    angle_origin: float = 0.0

    def __post_init__(self):
        for name in ("kappa_g", "kappa_n", "tau_g"):
            object.__setattr__(self, name, symexpr.as_expr(getattr(self, name)))

    @classmethod
    def from_strings(cls, kappa_g: str, kappa_n: str, tau_g: str, domain: Grid, **kw) -> CurvatureProfile:
        return cls(symexpr.parse(kappa_g), symexpr.parse(kappa_n), symexpr.parse(tau_g), domain, **kw)

    def with_grid(self, grid: Grid) -> CurvatureProfile:
        return CurvatureProfile(self.kappa_g, self.kappa_n, self.tau_g, grid, self.angle_origin)

    def samples(self) -> tuple[SampledFn, SampledFn, SampledFn]:
        g = self.domain
        return sample(self.kappa_g, g), sample(self.kappa_n, g), sample(self.tau_g, g)


@dataclass(frozen=True)
class TurningAngle:
    t: SampledFn
    C: SampledFn
    S: SampledFn


@dataclass(frozen=True)
class DarbouxCoefficients:
    lambda1: SampledFn
    lambda2: SampledFn
    lambda3: SampledFn
    c1: float
    c2: float
    c3: float
    f: SampledFn


@dataclass(frozen=True)
class FamilyConstants:
    """Named constants of the special-family closed forms.

    Missing names read as 0.
    """
    values: dict = field(default_factory=dict)

    def __getitem__(self, name: str) -> float:
        return float(self.values.get(name, 0.0))

    def get(self, name: str, default: float = 0.0) -> float:
        return float(self.values.get(name, default))

    def __contains__(self, name: str) -> bool:
        return name in self.values


def _integral_between(expr, lo: float, hi: float, h: float) -> float:
    """int_lo^hi expr dx by composite Simpson with step at most ``h``."""
    if lo == hi:
        return 0.0
    sign = 1.0
    if lo > hi:
        lo, hi, sign = hi, lo, -1.0
    n = max(8, 2 * math.ceil((hi - lo) / (2 * h)))
    x = np.linspace(lo, hi, n + 1)
    y = symexpr.evaluate(expr, x)
    w = np.ones(n + 1)
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    return sign * float((hi - lo) / n / 3.0 * np.dot(w, y))


def turning_angle(p: CurvatureProfile) -> TurningAngle:
    """Antiderivative of tau_g vanishing at ``p.angle_origin``, with its cosine and sine."""
    g = p.domain
    t0 = _integral_between(p.tau_g, p.angle_origin, g.a, g.h)
    t = cumulative_integral(sample(p.tau_g, g)).values + t0
    return TurningAngle(SampledFn(g, t), SampledFn(g, np.cos(t)), SampledFn(g, np.sin(t)))


def _accelerations(p: CurvatureProfile, angle: TurningAngle):
    """Isotropic components (y'', z'') of T' = kappa_g Q + kappa_n n."""
    kg, kn, tg = (s.values for s in p.samples())
    C, S = angle.C.values, angle.S.values
    g = p.domain
    # -int tau_g S = C and -int tau_g C = -S, constants pinned at the left end
    int_tS = cumulative_integral(SampledFn(g, tg * S)).values - C[0]
    int_tC = cumulative_integral(SampledFn(g, tg * C)).values + S[0]
    return kg * S - kn * int_tS, kg * C - kn * int_tC


def _double_integral(values: np.ndarray, g: Grid) -> tuple[np.ndarray, np.ndarray]:
    first = cumulative_integral(SampledFn(g, values)).values
    return first, cumulative_integral(SampledFn(g, first)).values


def synthesize_natural(p: CurvatureProfile) -> SampledCurve:
    """Curve with the prescribed Darboux curvatures (natural representation)."""
    angle = turning_angle(p)
    ay, az = _accelerations(p, angle)
    _, y = _double_integral(ay, p.domain)
    _, z = _double_integral(az, p.domain)
    return SampledCurve.from_components(p.domain, y, z)


def frame_fields(p: CurvatureProfile) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Closed-form ``Q``, ``n`` and the tangent ``T`` of the synthesized curve."""
    angle = turning_angle(p)
    C, S = angle.C.values, angle.S.values
    zero = np.zeros_like(C)
    Q = np.column_stack([zero, S, C])
    n = np.column_stack([zero, C, -S])
    ay, az = _accelerations(p, angle)
    Ty = cumulative_integral(SampledFn(p.domain, ay)).values
    Tz = cumulative_integral(SampledFn(p.domain, az)).values
    T = np.column_stack([np.ones_like(C), Ty, Tz])
    return Q, n, T


def darboux_coefficients(p: CurvatureProfile, c1: float = 0.0, c2: float = 0.0,
                         c3: float = 0.0) -> DarbouxCoefficients:
    """Coefficients of ``beta = l1 T + l2 Q + l3 n`` in the Darboux frame.

    Requires ``|tau_g| >= 1e-10`` on the whole grid.
    """
    g = p.domain
    kg, kn, tg = (s.values for s in p.samples())
    small = np.flatnonzero(np.abs(tg) < SINGULAR_TORSION)
    if small.size:
        raise SingularTorsionError(
            f"geodesic torsion vanishes (|tau_g| < {SINGULAR_TORSION:g}) at x = {g.x[small[0]]:.12g}")
    x = g.x
    l1 = x + c1
    # (l1 kappa_n / tau_g)' taken symbolically
    ratio = symexpr.div(symexpr.mul(symexpr.add(symexpr.X, symexpr.const(c1)), p.kappa_n), p.tau_g)
    d_ratio = symexpr.evaluate(symexpr.diff(ratio), x)
    f = l1 * kg / tg - d_ratio / tg

    angle = turning_angle(p)
    C, S = angle.C.values, angle.S.values
    Is = cumulative_integral(SampledFn(g, f * tg * S)).values
    Ic = cumulative_integral(SampledFn(g, f * tg * C)).values
    A = c2 - Is
    B = c3 + Ic
    l3 = A * C + B * S
    l2 = -l1 * kn / tg + A * S - B * C
    return DarbouxCoefficients(SampledFn(g, l1), SampledFn(g, l2), SampledFn(g, l3),
                               float(c1), float(c2), float(c3), SampledFn(g, f))


def darboux_position(coeffs: DarbouxCoefficients, T: np.ndarray, Q: np.ndarray, n: np.ndarray) -> np.ndarray:
    """Assemble ``l1 T + l2 Q + l3 n`` as an ``(N, 3)`` array of points."""
    l1 = coeffs.lambda1.values[:, None]
    l2 = coeffs.lambda2.values[:, None]
    l3 = coeffs.lambda3.values[:, None]
    return l1 * T + l2 * Q + l3 * n


def ode_residuals(p: CurvatureProfile, coeffs: DarbouxCoefficients, accuracy: int = 4) -> dict[str, np.ndarray]:
    """Pointwise residuals of the linear system the coefficients solve."""
    kg, kn, tg = (s.values for s in p.samples())
    l1, l2, l3 = coeffs.lambda1.values, coeffs.lambda2.values, coeffs.lambda3.values
    d1 = derivative(coeffs.lambda1, 1, accuracy).values
    d2 = derivative(coeffs.lambda2, 1, accuracy).values
    d3 = derivative(coeffs.lambda3, 1, accuracy).values
    return {
        "tangent": d1 - 1.0,
        "geodesic": l1 * kg + d2 - l3 * tg,
        "normal": l1 * kn + l2 * tg + d3,
    }


def _with(p_grid: Grid, kappa_g, kappa_n, tau_g, angle_origin: float) -> CurvatureProfile:
    return CurvatureProfile(kappa_g, kappa_n, tau_g, p_grid, angle_origin)


def synthesize_geodesic(kappa_n, tau_g, g: Grid, angle_origin: float = 0.0) -> SampledCurve:
    """Geodesic: the natural representation with kappa_g = 0."""
    return synthesize_natural(_with(g, symexpr.const(0.0), kappa_n, tau_g, angle_origin))


def synthesize_asymptotic(kappa_g, tau_g, g: Grid, angle_origin: float = 0.0) -> SampledCurve:
    """Asymptotic line: the natural representation with kappa_n = 0."""
    return synthesize_natural(_with(g, kappa_g, symexpr.const(0.0), tau_g, angle_origin))


def line_of_curvature_constants(t0: float = 0.0) -> FamilyConstants:
    """(c1, c2, c3, c4) reproducing the tau_g = 0 limit of the natural
    representation when the frozen turning angle equals ``t0``."""
    s, c = math.sin(t0), math.cos(t0)
    return FamilyConstants({"c1": s, "c2": -c, "c3": c, "c4": s})


def synthesize_line_of_curvature(kappa_g, kappa_n, k: FamilyConstants | None, g: Grid) -> SampledCurve:
    """Line of curvature ``(x, II(c1 kg - c2 kn), II(c3 kg - c4 kn))``.

    Constants absent from ``k`` default to those of the tau_g = 0 limit
    with zero turning angle, ``(0, -1, 1, 0)``.
    """
    base = line_of_curvature_constants(0.0)
    k = k or FamilyConstants()
    c1, c2, c3, c4 = (k.get(name, base[name]) for name in ("c1", "c2", "c3", "c4"))
    kg = sample(kappa_g, g).values
    kn = sample(kappa_n, g).values
    _, y = _double_integral(c1 * kg - c2 * kn, g)
    _, z = _double_integral(c3 * kg - c4 * kn, g)
    return SampledCurve.from_components(g, y, z)
