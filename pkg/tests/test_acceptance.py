"""Acceptance criteria, one test each.

Every test prints a single ``[PASS]`` or ``[FAIL]`` line with the measured
value and the threshold (run ``pytest -s tests/test_acceptance.py`` to
see them inline; they also appear in the captured output on failure).
"""
import json
import time
from pathlib import Path

import numpy as np
import pytest
from scipy.integrate import solve_ivp

from galcurve import symexpr
from galcurve.classify import classify_profile, line_of_curvature_residuals
from galcurve.cli import main
from galcurve.frames import SampledCurve, darboux_apparatus, frenet_apparatus
from galcurve.numerics import Grid, SampledFn, cumulative_integral, derivative, sample
from galcurve.surface import example_curve
from galcurve.synthesis import (
    CurvatureProfile,
    darboux_coefficients,
    frame_fields,
    ode_residuals,
    synthesize_geodesic,
    synthesize_natural,
)
from galcurve.vectors import dot_g_rows, norm_g_rows
from galcurve.verify import relative_sup_error

from conftest import ROUNDTRIP_PROFILES
from exprgen import expressions

GOLDEN = Path(__file__).parent / "golden" / "classification.json"
EXAMPLE_GRID = Grid(0.1, 3.0, 2900)


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}: {detail}")
        assert ok, detail
    return emit


def acc2(values, g):
    return derivative(SampledFn(g, values), 2, 4).values


def test_criterion_01_example_forward(report):
    start = time.perf_counter()
    fr = frenet_apparatus(SampledCurve(EXAMPLE_GRID, example_curve(EXAMPLE_GRID.x)))
    elapsed = time.perf_counter() - start
    x = EXAMPLE_GRID.x
    e_kappa = float(np.max(np.abs(fr.kappa - np.sin(x))))
    e_tau = float(np.max(np.abs(np.abs(fr.tau) - 1)))
    ok = e_kappa < 1e-5 and e_tau < 1e-5 and elapsed < 1.0
    report(1, "Frenet apparatus of the example curve", ok,
           f"max|kappa-sin x|={e_kappa:.2e}, max||tau|-1|={e_tau:.2e} (tol 1e-5), {elapsed:.3f}s (limit 1s)")


def test_criterion_02_example_inverse(report):
    g = EXAMPLE_GRID
    c = synthesize_geodesic(symexpr.parse("sin(x)"), symexpr.parse("1"), g)
    x = g.x
    ey = float(np.max(np.abs(acc2(c.y.values, g) - np.sin(x) * np.cos(x))))
    ez = float(np.max(np.abs(acc2(c.z.values, g) + np.sin(x) ** 2)))
    report(2, "synthesized example geodesic", max(ey, ez) < 1e-5,
           f"y'' error {ey:.2e}, z'' error {ez:.2e} (tol 1e-5)")


def test_criterion_03_roundtrip(report):
    start = time.perf_counter()
    worst = {}
    for kg, kn, tg in ROUNDTRIP_PROFILES:
        p = CurvatureProfile.from_strings(kg, kn, tg, Grid(0.1, 3.0, 1000))
        curve = synthesize_natural(p)
        _, normal, _ = frame_fields(p)
        d = darboux_apparatus(curve, normal)
        fr = frenet_apparatus(curve, strict=False)
        want = [s.values for s in p.samples()]
        errs = [relative_sup_error(got, w) for got, w in zip((d.kappa_g, d.kappa_n, d.tau_g), want)]
        errs.append(relative_sup_error(fr.kappa**2, d.kappa_g**2 + d.kappa_n**2))
        worst[(kg, kn, tg)] = max(errs)
    elapsed = time.perf_counter() - start
    top = max(worst.values())
    report(3, "round trip of five profiles", top < 1e-3 and elapsed < 10.0,
           f"worst relative error {top:.2e} (tol 1e-3), {elapsed:.2f}s (limit 10s)")


def _brute_force(p, co):
    def rhs(x, lam):
        l1 = x + co.c1
        kg, kn, tg = (symexpr.evaluate(e, x) for e in (p.kappa_g, p.kappa_n, p.tau_g))
        return [lam[1] * tg - l1 * kg, -l1 * kn - lam[0] * tg]

    g = p.domain
    sol = solve_ivp(rhs, (g.a, g.b), [co.lambda2.values[0], co.lambda3.values[0]],
                    t_eval=g.x, method="DOP853", rtol=1e-12, atol=1e-12)
    return sol.y


def test_criterion_04_darboux_coefficients(report):
    res_worst = ode_worst = 0.0
    for kg, kn, tg in ROUNDTRIP_PROFILES:
        p = CurvatureProfile.from_strings(kg, kn, tg, Grid(0.1, 3.0, 1000))
        if np.any(sample(p.tau_g, p.domain).values == 0):
            continue
        co = darboux_coefficients(p)
        res = ode_residuals(p, co)
        res_worst = max(res_worst, max(float(np.max(np.abs(v))) for v in res.values()))
        l2, l3 = _brute_force(p, co)
        ode_worst = max(ode_worst, float(np.max(np.abs(co.lambda2.values - l2))),
                        float(np.max(np.abs(co.lambda3.values - l3))))
    report(4, "coefficient system residuals", res_worst < 1e-6 and ode_worst < 1e-5,
           f"residual {res_worst:.2e} (tol 1e-6), ODE-integration gap {ode_worst:.2e} (tol 1e-5)")


def test_criterion_05_circular_helix_closed_forms(report):
    e, c = 2.0, 3.0
    g = Grid(0.1, 3.0, 1000)
    x = g.x
    geo = synthesize_natural(CurvatureProfile.from_strings("0", str(e), str(c), g))
    asy = synthesize_natural(CurvatureProfile.from_strings(str(e), "0", str(c), g))
    # second derivatives of the closed forms
    errs = [
        np.max(np.abs(acc2(geo.y.values, g) - e * np.cos(c * x))),
        np.max(np.abs(acc2(geo.z.values, g) + e * np.sin(c * x))),
        np.max(np.abs(acc2(asy.y.values, g) - e * np.sin(c * x))),
        np.max(np.abs(acc2(asy.z.values, g) - e * np.cos(c * x))),
    ]
    top = float(max(errs))
    report(5, "circular-helix closed forms", top < 1e-6, f"max second-derivative error {top:.2e} (tol 1e-6)")


def test_criterion_06_quadrature_order(report):
    errs = []
    for n in (128, 256):
        F = cumulative_integral(sample("exp(x)", Grid(0.0, 1.0, n)))
        errs.append(abs(F.values[-1] - (np.e - 1)))
    ratio = errs[0] / errs[1]
    report(6, "quadrature order", ratio >= 12, f"error ratio {ratio:.2f} (need >= 12)")


def test_criterion_07_symbolic_derivatives(report):
    x = np.linspace(0.5, 1.5, 52)[1:-1]
    h = 1e-5
    worst = 0.0
    for src in expressions(20):
        e = symexpr.parse(src)
        fd = (symexpr.evaluate(e, x + h) - symexpr.evaluate(e, x - h)) / (2 * h)
        worst = max(worst, float(np.max(np.abs(symexpr.evaluate(symexpr.diff(e), x) - fd))))
    report(7, "symbolic vs central differences", worst < 1e-6,
           f"max gap over 20 expressions x 50 points {worst:.2e} (tol 1e-6)")


def test_criterion_08_frame_invariants(report):
    worst = 0.0
    exact = True
    for kg, kn, tg in ROUNDTRIP_PROFILES + [("cos(x)", "sin(x)", "0")]:
        p = CurvatureProfile.from_strings(kg, kn, tg, Grid(0.1, 3.0, 1000))
        Q, n, T = frame_fields(p)
        d = darboux_apparatus(synthesize_natural(p), n)
        for tangent in (T, d.T):
            exact &= bool(np.all(norm_g_rows(tangent) == 1.0))
        for q, nn in ((Q, n), (d.Q, d.n)):
            exact &= bool(np.all(q[:, 0] == 0) and np.all(nn[:, 0] == 0))
            worst = max(worst, float(np.max(np.abs(norm_g_rows(q) - 1))),
                        float(np.max(np.abs(norm_g_rows(nn) - 1))),
                        float(np.max(np.abs(dot_g_rows(q, nn)))))
    report(8, "frame invariants", exact and worst < 1e-10,
           f"|T| == 1 and isotropy exact: {exact}; unit/orthogonality gap {worst:.2e} (tol 1e-10)")


def test_criterion_09_classification_table(report):
    mismatches = []
    for entry in json.loads(GOLDEN.read_text()):
        kg, kn, tg = entry["profile"]
        p = CurvatureProfile.from_strings(kg, kn, tg, Grid(*entry["domain"], entry["n"]))
        d = classify_profile(p).to_dict()
        for key in ("is_geodesic", "is_asymptotic", "is_line_of_curvature", "helix_type"):
            if d[key] != entry[key]:
                mismatches.append(f"{entry['profile']}:{key}")
    p = CurvatureProfile.from_strings("cos(x)", "sin(x)", "0", Grid(0.1, 3.0, 1000))
    r = classify_profile(p)
    pcheq = line_of_curvature_residuals(p.kappa_g, p.kappa_n, p.domain)["circular_helix"]
    ok = (not mismatches and r.is_line_of_curvature and r.helix_type == "circular_helix"
          and pcheq < 1e-10)
    report(9, "classification table", ok,
           f"golden mismatches {mismatches or 'none'}; (cos x, sin x, 0) -> "
           f"{r.helix_type}, pcheq residual {pcheq:.1e} (tol 1e-10)")


def test_criterion_10_cli_determinism(report, tmp_path):
    profile = tmp_path / "example.json"
    profile.write_text(json.dumps({"kappa_g": "0", "kappa_n": "sin(x)", "tau_g": "1",
                                   "domain": [0.1, 3], "n": 2900}))
    blobs = []
    for k in range(2):
        out = tmp_path / f"curve{k}.csv"
        assert main(["synthesize", "--profile", str(profile), "--out", str(out)]) == 0
        blobs.append(out.read_bytes())
    report(10, "CLI determinism", blobs[0] == blobs[1],
           f"two runs byte-identical: {blobs[0] == blobs[1]} ({len(blobs[0])} bytes)")
