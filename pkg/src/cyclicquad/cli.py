"""Command-line front end.

Exit codes: 0 success, 2 usage error, 3 invalid input, 4 geometric failure
while computing.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from . import plane
from .errors import GeometryError
from .hyperbolic import hyperbolic_distance
from .midpoint import five_points, gyromidpoint, hyperbolic_midpoint, point_u
from .normalize import CanonicalForm, normalize_symmetric, normalize_zero_one_inf, symmetrization_construction
from .plane import INF, Circle
from .quadrilateral import OrderedQuadruple, QuadAnalysis, analyze
from .render import FIGURES, build_figure, emit_svg

EXIT_OK, EXIT_USAGE, EXIT_VALIDATION, EXIT_DOMAIN = 0, 2, 3, 4
COMMANDS = ("analyze", "symmetrize", "normalize", "midpoint", "render")
DEFAULT_X, DEFAULT_Y = complex(0.5, 0.1), complex(-0.2, 0.6)


class UsageError(Exception):
    exit_code = EXIT_USAGE


class ValidationError(Exception):
    exit_code = EXIT_VALIDATION


@dataclass(frozen=True)
class JobSpec:
    command: str
    quad: Optional[OrderedQuadruple] = None
    angles_deg: Optional[tuple[float, ...]] = None
    x: Optional[complex] = None
    y: Optional[complex] = None
    figure: Optional[str] = None
    output: Optional[str] = None
    size: int = 800
    seed: int = 0
    tol: float = plane.UNIT_TOL


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cyclicquad", description="Geometry of quadrilaterals inscribed in the unit circle.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        s = sub.add_parser(name)
        s.add_argument("--angles", help="four vertex angles in degrees, e.g. 0,90,180,270")
        s.add_argument("--points", help="four vertices as re,im;re,im;re,im;re,im")
        s.add_argument("--input", help="JSON file with an 'angles_deg' list (analyze output is accepted)")
        s.add_argument("--x", help="first disk point re,im (midpoint and point figures)")
        s.add_argument("--y", help="second disk point re,im")
        s.add_argument("--figure", choices=FIGURES)
        s.add_argument("-o", "--output")
        s.add_argument("--size", type=int, default=800)
        s.add_argument("--seed", type=int, default=0)
        s.add_argument("--tol", type=float, default=plane.UNIT_TOL, help="unit-modulus tolerance for --points")
    return p


def _floats(text: str, n: int, flag: str, sep: str = ",") -> list[float]:
    try:
        vals = [float(t) for t in text.split(sep)]
    except ValueError:
        raise UsageError(f"{flag}: expected {n} numbers, got {text!r}") from None
    if len(vals) != n or not all(math.isfinite(v) for v in vals):
        raise UsageError(f"{flag}: expected {n} finite numbers, got {text!r}")
    return vals


def _pair(text: str, flag: str) -> complex:
    re, im = _floats(text, 2, flag)
    return complex(re, im)


def _read_angles(path: str) -> list[float]:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"--input: cannot read {path}: {exc}") from None
    angles = doc.get("angles_deg") if isinstance(doc, dict) else None
    if angles is None and isinstance(doc, dict) and isinstance(doc.get("input"), dict):
        angles = doc["input"].get("angles_deg")
    if not (isinstance(angles, list) and len(angles) == 4):
        raise UsageError(f"--input: {path} has no four-element 'angles_deg' list")
    return [float(a) for a in angles]


def _quad_from_angles(angles: Sequence[float]) -> tuple[OrderedQuadruple, tuple[float, ...]]:
    norm = tuple(a % 360.0 for a in angles)
    try:
        return OrderedQuadruple.from_angles(norm, degrees=True), norm
    except GeometryError as exc:
        raise ValidationError(f"{type(exc).__name__}: {exc}") from None


def parse_job(argv: Sequence[str]) -> JobSpec:
    """Parse and validate a command line.

    Raises :class:`UsageError` for malformed flags and :class:`ValidationError`
    when the quadruple or points violate their invariants.
    """
    ns = _parser().parse_args(list(argv))
    sources = [s for s in ("angles", "points", "input") if getattr(ns, s) is not None]
    if len(sources) > 1:
        raise UsageError("give only one of --angles, --points, --input")
    quad, angles = None, None
    if ns.angles is not None:
        quad, angles = _quad_from_angles(_floats(ns.angles, 4, "--angles"))
    elif ns.input is not None:
        quad, angles = _quad_from_angles(_read_angles(ns.input))
    elif ns.points is not None:
        parts = ns.points.split(";")
        if len(parts) != 4:
            raise UsageError(f"--points: expected four re,im pairs, got {ns.points!r}")
        pts = [_pair(t, "--points") for t in parts]
        try:
            plane.check_unimodular(*pts, tol=ns.tol)
            quad = OrderedQuadruple(*(z / abs(z) for z in pts))
        except GeometryError as exc:
            raise ValidationError(f"{type(exc).__name__}: {exc}") from None
        angles = tuple(quad.angles(degrees=True))

    needs_points = ns.command == "midpoint" or (ns.command == "render" and ns.figure in ("midpoint", "five-points"))
    x = y = None
    if needs_points:
        x = _pair(ns.x, "--x") if ns.x is not None else DEFAULT_X
        y = _pair(ns.y, "--y") if ns.y is not None else DEFAULT_Y
        for name, z in (("x", x), ("y", y)):
            if not abs(z) < 1.0:
                raise ValidationError(f"OutOfDisk: --{name} {z} is not inside the unit disk")
    elif quad is None:
        raise UsageError(f"{ns.command}: one of --angles, --points, --input is required")
    if ns.command == "render":
        if ns.figure is None:
            raise UsageError("render: --figure is required")
        if ns.output is None:
            raise UsageError("render: -o/--output is required")
    if ns.size < 1:
        raise UsageError("--size must be positive")
    if not ns.tol > 0:
        raise UsageError("--tol must be positive")
    return JobSpec(ns.command, quad, angles, x, y, ns.figure, ns.output, ns.size, ns.seed, ns.tol)


# ---------------------------------------------------------------- JSON encoding


def _real(v: float) -> Optional[float]:
    if not math.isfinite(v):
        return None
    return float(f"{v:.15g}")


def _enc(v):
    if v is None or v is INF:
        return None
    if isinstance(v, Circle):
        return {"center": _enc(v.center), "radius": _real(v.radius)}
    if isinstance(v, complex):
        return [_real(v.real), _real(v.imag)]
    if isinstance(v, (int, float)):
        return _real(float(v))
    if isinstance(v, (list, tuple)):
        return [_enc(x) for x in v]
    raise TypeError(f"cannot encode {v!r}")


def _quad_doc(quad: OrderedQuadruple, angles: Sequence[float]) -> dict:
    # the echoed angles keep full precision so the document can be fed back with --input
    return {"angles_deg": [float(a) for a in angles], "vertices": [_enc(z) for z in quad.vertices]}


def analysis_document(an: QuadAnalysis, angles: Sequence[float]) -> dict:
    doc = {"command": "analyze", "input": _quad_doc(an.quad, angles)}
    reasons = {}
    for name in QuadAnalysis.field_names():
        value = getattr(an, name)
        doc[name] = _enc(value)
        if value is None:
            reasons[name] = an.degenerate.get(name, "not computed")
    doc["degenerate_reason"] = reasons
    return doc


def _form_doc(form: CanonicalForm) -> dict:
    m = form.map
    return {
        "parameter": _enc(form.parameter),
        "images": _enc(list(form.images)),
        "map": _enc([m.alpha, m.beta, m.gamma, m.delta]),
        "lipschitz_cost": _real(form.lipschitz_cost),
    }


def _normalize_doc(spec: JobSpec) -> dict:
    q = spec.quad
    doc = {"command": "normalize", "input": _quad_doc(q, spec.angles_deg), "cross_ratio": _real(q.cross_ratio())}
    reasons = {}
    for key, fn in (("zero_one_inf", normalize_zero_one_inf), ("symmetric", normalize_symmetric)):
        form = fn(*q.vertices, seed=spec.seed)
        doc[key] = _form_doc(form)
        if math.isinf(form.lipschitz_cost):
            reasons[f"{key}.lipschitz_cost"] = "PoleInDomain: the map has a pole in the closed unit disk"
    doc["degenerate_reason"] = reasons
    return doc


def _symmetrize_doc(spec: JobSpec) -> dict:
    q = spec.quad
    st = symmetrization_construction(q)
    r = st.result
    reasons = {"symmetrized": st.degenerate} if st.degenerate else {}
    return {
        "command": "symmetrize",
        "input": _quad_doc(q, spec.angles_deg),
        "w": _enc(st.w),
        "rotation_deg": _real(math.degrees(st.rotation)),
        "symmetrized": {"angles_deg": _enc(r.angles(degrees=True)), "vertices": _enc(list(r.vertices))},
        "c1s": _enc(st.c1s),
        "c2s": _enc(st.c2s),
        "cross_ratio_in": _real(q.cross_ratio()),
        "cross_ratio_out": _real(r.cross_ratio()),
        "degenerate_reason": reasons,
    }


def _midpoint_doc(spec: JobSpec) -> dict:
    x, y = spec.x, spec.y
    z = hyperbolic_midpoint(x, y)
    doc = {
        "command": "midpoint",
        "x": _enc(x),
        "y": _enc(y),
        "z": _enc(z),
        "u": _enc(point_u(x, y)),
        "gyromidpoint": _enc(gyromidpoint(x, y)),
        "rho_xy": _real(hyperbolic_distance(x, y)),
        "rho_xz": _real(hyperbolic_distance(x, z)),
        "rho_zy": _real(hyperbolic_distance(z, y)),
    }
    reasons = {}
    try:
        doc["five_points"] = {k: _enc(v) for k, v in five_points(x, y).as_dict().items()}
    except GeometryError as exc:
        doc["five_points"] = None
        reasons["five_points"] = f"{type(exc).__name__}: {exc}"
    doc["degenerate_reason"] = reasons
    return doc


def run_job(spec: JobSpec) -> tuple[dict, Optional[str]]:
    """Execute ``spec``; returns the JSON document and, for ``render``, the SVG text."""
    if spec.command == "analyze":
        return analysis_document(analyze(spec.quad), spec.angles_deg), None
    if spec.command == "symmetrize":
        return _symmetrize_doc(spec), None
    if spec.command == "normalize":
        return _normalize_doc(spec), None
    if spec.command == "midpoint":
        return _midpoint_doc(spec), None
    if spec.command == "render":
        an = analyze(spec.quad) if spec.quad is not None else None
        scene = build_figure(spec.figure, an, x=spec.x, y=spec.y)
        svg = emit_svg(scene, spec.size)
        doc = {"command": "render", "figure": spec.figure, "output": spec.output, "elements": len(scene.elements)}
        return doc, svg
    raise UsageError(f"unknown command {spec.command!r}")


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        spec = parse_job(argv)
        doc, svg = run_job(spec)
    except (UsageError, ValidationError) as exc:
        print(f"cyclicquad: error: {exc}", file=sys.stderr)
        return exc.exit_code
    except GeometryError as exc:
        print(f"cyclicquad: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if svg is not None:
        with open(spec.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(svg)
    sys.stdout.write(dumps(doc))
    return EXIT_OK


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
