"""Family membership and helix type of a curvature profile.

A curve is a geodesic, asymptotic line or line of curvature when
kappa_g, kappa_n or tau_g vanishes identically.  The helix type comes
from the curvature and torsion obtained through

    kappa^2 = kappa_g^2 + kappa_n^2
    tau     = -tau_g + (kappa_g' kappa_n - kappa_g kappa_n') / kappa^2

with symbolic derivatives.  "Identically" and "constant" mean a
sup-deviation below the tolerance on the profile's grid.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import symexpr
from .numerics import Grid
from .synthesis import CurvatureProfile

HELIX_TYPES = (
    "straight_line",
    "plane_curve",
    "circular_helix",
    "generalized_helix",
    "salkowski",
    "anti_salkowski",
    "generic",
)

SYMBOLIC_TOL = 1e-9
QUADRATURE_TOL = 1e-5


@dataclass
class ClassificationReport:
    is_geodesic: bool
    is_asymptotic: bool
    is_line_of_curvature: bool
    helix_type: str
    residuals: dict[str, float]
    tolerance: float
    kappa: float | None = None
    tau: float | None = None
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "is_geodesic": self.is_geodesic,
            "is_asymptotic": self.is_asymptotic,
            "is_line_of_curvature": self.is_line_of_curvature,
            "helix_type": self.helix_type,
            "residuals": dict(self.residuals),
            "tolerance": self.tolerance,
        }


def _derivatives(expr, x):
    d1 = symexpr.diff(expr)
    d2 = symexpr.diff(d1)
    return symexpr.evaluate(expr, x), symexpr.evaluate(d1, x), symexpr.evaluate(d2, x)


def line_of_curvature_residuals(kappa_g, kappa_n, g: Grid) -> dict[str, float]:
    """Sup-norms of the helix conditions for a line of curvature.

    ``circular_helix`` is the larger of its two equations.
    """
    x = g.x
    kg, dkg, ddkg = _derivatives(symexpr.as_expr(kappa_g), x)
    kn, dkn, ddkn = _derivatives(symexpr.as_expr(kappa_n), x)

    constant_kappa = kg * dkg + kn * dkn
    twist = kn * ddkg - kg * ddkn
    generalized = (ddkg * kn**3 + ddkg * kn * kg**2 - kn**2 * kg * ddkn
                   - 3 * kn**2 * dkg * dkn - 3 * kn * kg * dkg**2
                   + 3 * kn * kg * dkn**2 - kg**3 * ddkn + 3 * kg**2 * dkg * dkn)
    anti = (ddkg * kg**2 * kn + ddkg * kn**3 - ddkn * kg**3 - ddkn * kg * kn**2
            - 2 * dkg**2 * kg * kn + 2 * dkg * dkn * kg**2
            - 2 * dkg * dkn * kn**2 + 2 * dkn**2 * kg * kn)

    def sup(v):
        return float(np.max(np.abs(np.broadcast_to(v, x.shape))))

    return {
        "circular_helix": max(sup(constant_kappa), sup(twist)),
        "generalized_helix": sup(generalized),
        "salkowski": sup(constant_kappa),
        "anti_salkowski": sup(anti),
    }


def _spread(v: np.ndarray) -> float:
    if v.size == 0:
        return 0.0
    return float(np.max(np.abs(v - np.mean(v))))


def classify_profile(p: CurvatureProfile, tol: float = SYMBOLIC_TOL) -> ClassificationReport:
    if not tol > 0:
        raise ValueError("tolerance must be positive")
    g = p.domain
    x = g.x
    kg, dkg, _ = _derivatives(p.kappa_g, x)
    kn, dkn, _ = _derivatives(p.kappa_n, x)
    tg = np.broadcast_to(symexpr.evaluate(p.tau_g, x), x.shape)
    kg = np.broadcast_to(kg, x.shape)
    kn = np.broadcast_to(kn, x.shape)

    residuals = {
        "kappa_g_sup": float(np.max(np.abs(kg))),
        "kappa_n_sup": float(np.max(np.abs(kn))),
        "tau_g_sup": float(np.max(np.abs(tg))),
    }
    report = ClassificationReport(
        is_geodesic=residuals["kappa_g_sup"] < tol,
        is_asymptotic=residuals["kappa_n_sup"] < tol,
        is_line_of_curvature=residuals["tau_g_sup"] < tol,
        helix_type="generic",
        residuals=residuals,
        tolerance=tol,
    )
    if report.is_line_of_curvature:
        residuals.update(line_of_curvature_residuals(p.kappa_g, p.kappa_n, g))

    kappa_sq = kg * kg + kn * kn
    kappa = np.sqrt(kappa_sq)
    residuals["kappa_spread"] = _spread(kappa)
    if float(np.max(kappa)) < tol:
        report.helix_type = "straight_line"
        return report

    defined = kappa > tol
    if not np.all(defined):
        report.notes.append("curvature vanishes on part of the domain; torsion-based labels skipped")
        return report

    with np.errstate(all="ignore"):
        tau = -tg + (dkg * kn - kg * dkn) / kappa_sq
    abs_tau = np.abs(tau)
    residuals["tau_sup"] = float(np.max(abs_tau))
    residuals["tau_spread"] = _spread(abs_tau)
    residuals["ratio_spread"] = _spread(tau / kappa)

    kappa_const = residuals["kappa_spread"] < tol
    tau_const = residuals["tau_spread"] < tol
    report.kappa = float(np.mean(kappa)) if kappa_const else None
    report.tau = float(np.mean(tau)) if tau_const else None

    if residuals["tau_sup"] < tol:
        report.helix_type = "plane_curve"
        if kappa_const:
            report.notes.append(
                "constant curvature with zero torsion: a circle, i.e. a degenerate helix, "
                "reported as plane_curve")
    elif kappa_const and tau_const:
        report.helix_type = "circular_helix"
        if report.tau is not None and report.tau < 0:
            report.notes.append(f"torsion is the negative constant {report.tau:.12g}")
    elif residuals["ratio_spread"] < tol:
        report.helix_type = "generalized_helix"
    elif kappa_const:
        report.helix_type = "salkowski"
    elif tau_const:
        report.helix_type = "anti_salkowski"
    return report
