"""Numerical round-trip checks for a curvature profile.

``verify_profile`` synthesizes the curve, extracts its Darboux apparatus
again with the closed-form normal field, and compares against the input.
When the geodesic torsion stays away from zero it also checks that the
Darboux-frame coefficients solve their linear system.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .frames import darboux_apparatus, frenet_apparatus
from .synthesis import (
    SINGULAR_TORSION,
    CurvatureProfile,
    darboux_coefficients,
    frame_fields,
    ode_residuals,
    synthesize_natural,
)

ROUNDTRIP_TOL = 1e-3
ODE_TOL = 1e-6


@dataclass
class Check:
    name: str
    value: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(self.value < self.tolerance)


@dataclass
class VerificationSummary:
    checks: list[Check] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            status = "ok" if c.passed else "FAIL"
            out.append(f"{c.name:<22} {c.value:.3e}  (tol {c.tolerance:.0e})  {status}")
        for name in self.skipped:
            out.append(f"{name:<22} skipped")
        return out


def relative_sup_error(recovered: np.ndarray, expected: np.ndarray) -> float:
    """sup|recovered - expected| / sup|expected|; absolute when expected is 0."""
    err = float(np.max(np.abs(recovered - expected)))
    scale = float(np.max(np.abs(expected)))
    return err / scale if scale > 0 else err


def verify_profile(p: CurvatureProfile, tol: float = ROUNDTRIP_TOL, ode_tol: float = ODE_TOL) -> VerificationSummary:
    summary = VerificationSummary()
    kg, kn, tg = (s.values for s in p.samples())
    curve = synthesize_natural(p)
    _, normal, _ = frame_fields(p)
    d = darboux_apparatus(curve, normal)
    summary.checks += [
        Check("kappa_g_roundtrip", relative_sup_error(d.kappa_g, kg), tol),
        Check("kappa_n_roundtrip", relative_sup_error(d.kappa_n, kn), tol),
        Check("tau_g_roundtrip", relative_sup_error(d.tau_g, tg), tol),
    ]
    fr = frenet_apparatus(curve, strict=False)
    summary.checks.append(
        Check("curvature_identity", relative_sup_error(fr.kappa**2, d.kappa_g**2 + d.kappa_n**2), tol))

    if np.all(np.abs(tg) >= SINGULAR_TORSION):
        res = ode_residuals(p, darboux_coefficients(p))
        for name, values in res.items():
            summary.checks.append(Check(f"ode_{name}", float(np.max(np.abs(values))), ode_tol))
    else:
        summary.skipped.append("ode_residuals")
    return summary
