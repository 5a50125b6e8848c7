"""Profile documents: JSON files describing a curvature profile.

::

    {"kappa_g": "0", "kappa_n": "sin(x)", "tau_g": "1",
     "domain": [0.1, 3], "n": 2900,
     "family": "geodesic", "constants": {"angle_origin": 0}}

``n`` and ``step`` are mutually exclusive; with neither the grid has
1000 intervals.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

from . import symexpr
from .numerics import DEFAULT_INTERVALS, Grid, GridError
from .synthesis import CurvatureProfile, FamilyConstants

FAMILIES = ("natural", "geodesic", "asymptotic", "line_of_curvature")
REQUIRED_KEYS = ("kappa_g", "kappa_n", "tau_g", "domain")
OPTIONAL_KEYS = ("n", "step", "family", "constants")

# the curvature function that must vanish for each special family
_FAMILY_ZERO = {"geodesic": "kappa_g", "asymptotic": "kappa_n", "line_of_curvature": "tau_g"}


class ProfileError(ValueError):
    pass


@dataclass
class ProfileDocument:
    kappa_g: str
    kappa_n: str
    tau_g: str
    domain: tuple[float, float]
    n: int | None = None
    step: float | None = None
    family: str = "natural"
    constants: dict[str, float] = field(default_factory=dict)

    def grid(self, n_override: int | None = None) -> Grid:
        a, b = self.domain
        try:
            if n_override is not None:
                return Grid(a, b, n_override)
            if self.step is not None:
                return Grid.from_step(a, b, self.step)
            return Grid(a, b, self.n if self.n is not None else DEFAULT_INTERVALS)
        except GridError as exc:
            raise ProfileError(str(exc)) from None

    def profile(self, n_override: int | None = None) -> CurvatureProfile:
        exprs = {}
        for key in ("kappa_g", "kappa_n", "tau_g"):
            try:
                exprs[key] = symexpr.parse(getattr(self, key))
            except symexpr.ExprSyntaxError as exc:
                raise ProfileError(f"{key}: {exc}") from None
        zero_key = _FAMILY_ZERO.get(self.family)
        if zero_key is not None:
            e = exprs[zero_key]
            if not (symexpr.is_constant(e) and symexpr.evaluate(e, 0.0) == 0.0):
                raise ProfileError(f"{self.family} requires {zero_key} = 0")
        return CurvatureProfile(exprs["kappa_g"], exprs["kappa_n"], exprs["tau_g"],
                                self.grid(n_override),
                                angle_origin=self.constants.get("angle_origin", 0.0))

    def family_constants(self) -> FamilyConstants:
        return FamilyConstants(dict(self.constants))


def _number(value, what: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
        raise ProfileError(f"{what} must be a finite number")
    return float(value)


def parse_document(doc) -> ProfileDocument:
    if not isinstance(doc, dict):
        raise ProfileError("profile must be a JSON object")
    missing = [k for k in REQUIRED_KEYS if k not in doc]
    if missing:
        raise ProfileError(f"missing key(s): {', '.join(missing)}")
    unknown = sorted(set(doc) - set(REQUIRED_KEYS) - set(OPTIONAL_KEYS))
    if unknown:
        raise ProfileError(f"unknown key(s): {', '.join(unknown)}")
    for key in ("kappa_g", "kappa_n", "tau_g"):
        if not isinstance(doc[key], str):
            raise ProfileError(f"{key} must be an expression string")
    domain = doc["domain"]
    if not isinstance(domain, list) or len(domain) != 2:
        raise ProfileError("domain must be a list [a, b]")
    a, b = (_number(v, "domain endpoint") for v in domain)
    if "n" in doc and "step" in doc:
        raise ProfileError("'n' and 'step' are mutually exclusive")
    n = step = None
    if "n" in doc:
        if isinstance(doc["n"], bool) or not isinstance(doc["n"], int):
            raise ProfileError("n must be an integer")
        n = doc["n"]
    if "step" in doc:
        step = _number(doc["step"], "step")
    family = doc.get("family", "natural")
    if family not in FAMILIES:
        raise ProfileError(f"family must be one of {', '.join(FAMILIES)}")
    constants = doc.get("constants", {})
    if not isinstance(constants, dict):
        raise ProfileError("constants must be an object")
    constants = {str(k): _number(v, f"constant {k!r}") for k, v in constants.items()}
    return ProfileDocument(doc["kappa_g"], doc["kappa_n"], doc["tau_g"], (a, b),
                           n=n, step=step, family=family, constants=constants)


def load_profile(path) -> ProfileDocument:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ProfileError(f"cannot read profile {path}: {exc.strerror}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProfileError(f"invalid JSON in {path}: {exc}") from None
    return parse_document(doc)
