"""Command-line interface.

    galcurve synthesize     --profile FILE [--out FILE] [--format csv|json] [--n INT] [--frames]
    galcurve classify       --profile FILE [--tol REAL] [--n INT]
    galcurve verify         --profile FILE [--tol REAL] [--n INT]
    galcurve export-surface --out FILE [--format csv|json] [--n INT]

Exit codes: 0 success, 1 verification tolerance exceeded, 2 malformed
input (profile schema, expression syntax), 3 numerical precondition
failure (domain error, vanishing torsion or curvature), 4 output error.
Errors go to standard error as a single line ``error[<exit code>]: ...``.
"""
from __future__ import annotations

import argparse
import io
import json
import sys
from pathlib import Path

import numpy as np

from . import symexpr
from .classify import SYMBOLIC_TOL, classify_profile
from .frames import DegenerateCurvatureError, DegenerateProfileError
from .numerics import GridError
from .profile import ProfileError, load_profile
from .surface import example_curve, surface_mesh
from .synthesis import (
    SingularTorsionError,
    darboux_coefficients,
    darboux_position,
    frame_fields,
    synthesize_asymptotic,
    synthesize_geodesic,
    synthesize_line_of_curvature,
    synthesize_natural,
)
from .verify import ROUNDTRIP_TOL, verify_profile

INPUT_ERRORS = (ProfileError, symexpr.ExprSyntaxError, GridError)
NUMERIC_ERRORS = (symexpr.ExprDomainError, SingularTorsionError,
                  DegenerateCurvatureError, DegenerateProfileError)


class CliError(Exception):
    def __init__(self, code: int, message: str):
        self.code = code
        super().__init__(message)


def format_float(v: float) -> str:
    return repr(float(v))


def write_table(columns: list[str], rows: np.ndarray, fmt: str) -> str:
    if fmt == "json":
        data = {"columns": columns, "rows": [[float(v) for v in row] for row in rows]}
        return json.dumps(data, separators=(",", ":")) + "\n"
    buf = io.StringIO()
    buf.write(",".join(columns) + "\n")
    for row in rows:
        buf.write(",".join(format_float(v) for v in row) + "\n")
    return buf.getvalue()


def _emit(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise CliError(4, f"cannot write {out}: {exc.strerror}") from None


def cmd_synthesize(args) -> int:
    doc = load_profile(args.profile)
    p = doc.profile(args.n)
    g = p.domain
    frames = None
    if args.method == "darboux":
        k = doc.family_constants()
        coeffs = darboux_coefficients(p, k["c1"], k["c2"], k["c3"])
        Q, n, T = frame_fields(p)
        points = darboux_position(coeffs, T, Q, n)
        if args.frames:
            frames = (T, Q, n)
    elif doc.family == "line_of_curvature":
        if args.frames:
            raise ProfileError("--frames is not available for the line_of_curvature family")
        points = synthesize_line_of_curvature(p.kappa_g, p.kappa_n, doc.family_constants(), g).points
    else:
        if doc.family == "geodesic":
            curve = synthesize_geodesic(p.kappa_n, p.tau_g, g, p.angle_origin)
        elif doc.family == "asymptotic":
            curve = synthesize_asymptotic(p.kappa_g, p.tau_g, g, p.angle_origin)
        else:
            curve = synthesize_natural(p)
        points = curve.points
        if args.frames:
            Q, n, T = frame_fields(p)
            frames = (T, Q, n)

    columns = ["x", "y", "z"]
    table = points
    if frames is not None:
        T, Q, n = frames
        columns += ["Tx", "Ty", "Tz", "Qy", "Qz", "ny", "nz"]
        table = np.column_stack([points, T, Q[:, 1:], n[:, 1:]])
    _emit(write_table(columns, table, args.format), args.out)
    return 0


def cmd_classify(args) -> int:
    p = load_profile(args.profile).profile(args.n)
    report = classify_profile(p, args.tol if args.tol is not None else SYMBOLIC_TOL)
    for note in report.notes:
        print(f"note: {note}", file=sys.stderr)
    sys.stdout.write(json.dumps(report.to_dict(), sort_keys=False) + "\n")
    return 0


def cmd_verify(args) -> int:
    p = load_profile(args.profile).profile(args.n)
    summary = verify_profile(p, args.tol if args.tol is not None else ROUNDTRIP_TOL)
    for line in summary.lines():
        print(line)
    if not summary.passed:
        raise CliError(1, "tolerance exceeded: " + ", ".join(summary.failures))
    return 0


def cmd_export_surface(args) -> int:
    if args.out is None:
        raise ProfileError("export-surface needs --out")
    count = args.n if args.n is not None else 101
    if count < 2:
        raise ProfileError("--n must be at least 2 for the surface mesh")
    mesh = surface_mesh(nu=count, nv=count)
    _emit(write_table(["u", "v", "x", "y", "z"], mesh, args.format), args.out)
    out = Path(args.out)
    curve_path = out.with_name(out.stem + "_curve" + out.suffix)
    curve = example_curve(np.linspace(0.0, 3.0, count))
    _emit(write_table(["x", "y", "z"], curve, args.format), str(curve_path))
    return 0


COMMANDS = {
    "synthesize": cmd_synthesize,
    "classify": cmd_classify,
    "verify": cmd_verify,
    "export-surface": cmd_export_surface,
}


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(2, message)


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="galcurve", description=__doc__.split("\n\n")[0])
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--profile", help="profile JSON file")
    parser.add_argument("--out", help="output file (default: standard output)")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--tol", type=float, help="classification / verification tolerance")
    parser.add_argument("--n", type=int, help="grid intervals (mesh points per side for export-surface)")
    parser.add_argument("--frames", action="store_true", help="append T, Q, n columns")
    parser.add_argument("--method", choices=("natural", "darboux"), default="natural",
                        help="synthesize from nested integrals or from Darboux-frame coefficients")
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command != "export-surface" and args.profile is None:
            raise ProfileError(f"{args.command} needs --profile")
        if args.tol is not None and not args.tol > 0:
            raise ProfileError("--tol must be positive")
        return COMMANDS[args.command](args)
    except CliError as exc:
        code, msg = exc.code, str(exc)
    except INPUT_ERRORS as exc:
        code, msg = 2, str(exc)
    except NUMERIC_ERRORS as exc:
        code, msg = 3, str(exc)
    print(f"error[{code}]: {msg}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
