"""Curves on surfaces in the Galilean 3-space G3, rebuilt from their
geodesic curvature, normal curvature and geodesic torsion."""
from .classify import ClassificationReport, classify_profile, line_of_curvature_residuals
from .frames import (
    DarbouxApparatus,
    FrenetApparatus,
    SampledCurve,
    darboux_apparatus,
    frenet_apparatus,
    kt_relations,
)
from .numerics import Grid, SampledFn, cumulative_integral, derivative, sample
from .symexpr import diff, evaluate, parse
from .synthesis import (
    CurvatureProfile,
    DarbouxCoefficients,
    FamilyConstants,
    TurningAngle,
    darboux_coefficients,
    frame_fields,
    synthesize_asymptotic,
    synthesize_geodesic,
    synthesize_line_of_curvature,
    synthesize_natural,
    turning_angle,
)
from .vectors import GalVec3, cross_g, dot_g, norm_g

__version__ = "0.1.0"
