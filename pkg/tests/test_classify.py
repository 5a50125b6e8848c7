import json
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from galcurve import symexpr
from galcurve.classify import (
    HELIX_TYPES,
    classify_profile,
    line_of_curvature_residuals,
)
from galcurve.numerics import Grid
from galcurve.synthesis import CurvatureProfile

GOLDEN = Path(__file__).parent / "golden" / "classification.json"
GRID = Grid(0.1, 3.0, 1000)


def classify(kg, kn, tg, g=GRID, **kw):
    return classify_profile(CurvatureProfile.from_strings(kg, kn, tg, g), **kw)


def test_geodesic_circular_helix():
    r = classify("0", "2", "3")
    assert r.is_geodesic and not r.is_asymptotic and not r.is_line_of_curvature
    assert r.helix_type == "circular_helix"
    assert r.kappa == pytest.approx(2.0) and r.tau == pytest.approx(-3.0)


def test_constant_line_of_curvature_is_plane_curve():
    r = classify("3", "4", "0")
    assert r.is_line_of_curvature
    assert r.helix_type == "plane_curve"
    assert r.notes and "plane_curve" in r.notes[0]


def test_rotating_line_of_curvature_is_circular_helix():
    r = classify("cos(x)", "sin(x)", "0", g=Grid(0.1, 1.0, 100))
    assert r.is_line_of_curvature and r.helix_type == "circular_helix"
    assert r.kappa == pytest.approx(1.0) and r.tau == pytest.approx(-1.0)


@pytest.mark.parametrize("kg, kn, tg, label", [
    ("0", "0", "5", "straight_line"),
    ("0", "1+x", "0.5*(1+x)", "generalized_helix"),
    ("0", "2", "x", "salkowski"),
    ("0", "sin(x)", "1", "anti_salkowski"),
    ("x", "1", "2", "generic"),
])
def test_helix_types(kg, kn, tg, label):
    assert classify(kg, kn, tg).helix_type == label


def test_partial_degeneracy_is_generic_with_note():
    r = classify("0", "x-1", "1", g=Grid(0.0, 2.0, 100))
    assert r.helix_type == "generic"
    assert any("vanishes" in note for note in r.notes)


def test_report_schema():
    d = classify("0", "2", "3").to_dict()
    assert list(d) == ["is_geodesic", "is_asymptotic", "is_line_of_curvature",
                       "helix_type", "residuals", "tolerance"]
    assert d["helix_type"] in HELIX_TYPES
    assert all(v >= 0 for v in d["residuals"].values())
    json.dumps(d)


def test_rejects_nonpositive_tolerance():
    with pytest.raises(ValueError):
        classify("0", "1", "1", tol=0.0)


def test_residuals_of_constants_are_zero():
    res = line_of_curvature_residuals(symexpr.const(3.0), symexpr.const(4.0), GRID)
    assert res == {"circular_helix": 0.0, "generalized_helix": 0.0, "salkowski": 0.0, "anti_salkowski": 0.0}


def test_residuals_of_rotating_profile():
    res = line_of_curvature_residuals(symexpr.parse("cos(x)"), symexpr.parse("sin(x)"), GRID)
    assert res["circular_helix"] < 1e-10
    assert res["salkowski"] < 1e-10


def test_salkowski_residual_is_sup_of_x():
    res = line_of_curvature_residuals(symexpr.parse("x"), symexpr.parse("1"), GRID)
    assert res["salkowski"] == pytest.approx(3.0, rel=1e-12)


def test_generalized_helix_residual_vanishes_for_proportional_curvatures():
    # kappa_g = 2 kappa_n keeps tau/kappa constant along a line of curvature
    res = line_of_curvature_residuals(symexpr.parse("2*exp(x)"), symexpr.parse("exp(x)"), GRID)
    assert res["generalized_helix"] < 1e-9
    assert res["salkowski"] > 1


def test_anti_salkowski_residual_vanishes_for_constant_torsion():
    # constant angle between (kappa_g, kappa_n): tau = 0 constant, kappa varies
    res = line_of_curvature_residuals(symexpr.parse("x*cos(1)"), symexpr.parse("x*sin(1)"), GRID)
    assert res["anti_salkowski"] < 1e-9


def test_anti_salkowski_residual_vanishes_for_rotating_frame():
    res = line_of_curvature_residuals(symexpr.parse("x*cos(x)"), symexpr.parse("x*sin(x)"), GRID)
    assert res["anti_salkowski"] < 1e-9
    assert res["salkowski"] > 1


def test_golden_table():
    for entry in json.loads(GOLDEN.read_text()):
        kg, kn, tg = entry["profile"]
        g = Grid(*entry["domain"], entry["n"])
        d = classify(kg, kn, tg, g=g).to_dict()
        for key in ("is_geodesic", "is_asymptotic", "is_line_of_curvature", "helix_type"):
            assert d[key] == entry[key], (entry["profile"], key)


coefficients = st.floats(-3, 3).filter(lambda v: abs(v) > 1e-3)
profiles = st.sampled_from([
    ("0", "2", "3"), ("3", "4", "1"), ("cos(x)", "sin(x)", "1"),
    ("0", "sin(x)", "1"), ("x", "1", "2"), ("cos(x)", "sin(x)", "0"), ("x", "0", "0"),
])


@settings(max_examples=40, deadline=None)
@given(profiles, coefficients)
def test_scaling_kappa_g_keeps_flags(profile, s):
    kg, kn, tg = profile
    a = classify(kg, kn, tg)
    b = classify(f"{s!r}*({kg})", kn, tg)
    assert a.is_asymptotic == b.is_asymptotic
    assert a.is_line_of_curvature == b.is_line_of_curvature


@settings(max_examples=20, deadline=None)
@given(profiles)
def test_refinement_keeps_flags(profile):
    a = classify(*profile)
    b = classify(*profile, g=GRID.refined())
    for key in ("is_geodesic", "is_asymptotic", "is_line_of_curvature"):
        assert getattr(a, key) == getattr(b, key)


@settings(max_examples=40, deadline=None)
@given(st.floats(-2, 2), st.floats(-2, 2), st.floats(0.1, 2))
def test_circular_condition_implies_salkowski_condition(p, q, w):
    kg = symexpr.parse(f"{p!r}*cos({w!r}*x)+{q!r}")
    kn = symexpr.parse(f"{p!r}*sin({w!r}*x)")
    res = line_of_curvature_residuals(kg, kn, GRID)
    for tol in (1e-12, 1e-9, 1e-6, 1e-3, 1.0):
        if res["circular_helix"] < tol:
            assert res["salkowski"] < tol
