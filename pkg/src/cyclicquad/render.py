"""Scene description and SVG output for the standard figures.

A :class:`Scene` is an ordered list of primitives in disk coordinates. It is
turned into an SVG document by :func:`emit_svg`, which flips the y axis so the
picture has the usual mathematical orientation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Union

from . import plane
from .errors import DegenerateConfiguration, GeometryError, MissingField
from .hyperbolic import Geodesic, geodesic_through, ideal_geodesic
from .midpoint import five_points, hyperbolic_midpoint, point_u
from .normalize import symmetrization_construction
from .plane import INF, Circle
from .quadrilateral import QuadAnalysis

VIEW = 1.2
POINT_RADIUS = 0.012

FIGURES = (
    "quadrilateral",
    "ideal",
    "orthocenter",
    "rhomboid",
    "orthogonal-circle",
    "midpoint",
    "five-points",
    "symmetrization",
)


@dataclass(frozen=True)
class UnitCircle:
    pass


@dataclass(frozen=True)
class Point:
    label: str
    position: complex
    style: str = ""


@dataclass(frozen=True)
class Segment:
    p1: complex
    p2: complex
    style: str = ""


@dataclass(frozen=True)
class FullLine:
    """A line through ``p``; clipped to the viewport when drawn."""

    p: complex
    direction: complex
    style: str = ""


@dataclass(frozen=True)
class GeodesicArc:
    geodesic: Geodesic
    style: str = ""


@dataclass(frozen=True)
class CirclePrim:
    circle: Circle
    style: str = ""


@dataclass(frozen=True)
class Label:
    text: str
    anchor: complex


Primitive = Union[UnitCircle, Point, Segment, FullLine, GeodesicArc, CirclePrim, Label]


def _finite(*zs) -> bool:
    return all(z is not INF and math.isfinite(complex(z).real) and math.isfinite(complex(z).imag) for z in zs)


@dataclass
class Scene:
    elements: list = field(default_factory=list)

    def add(self, prim: Primitive) -> "Scene":
        coords = {
            Point: lambda e: (e.position,),
            Segment: lambda e: (e.p1, e.p2),
            FullLine: lambda e: (e.p, e.direction),
            Label: lambda e: (e.anchor,),
            CirclePrim: lambda e: (e.circle.center, e.circle.radius),
        }.get(type(prim), lambda e: ())
        if not _finite(*coords(prim)):
            raise ValueError(f"non-finite coordinates in {prim!r}")
        text = _text_of(prim)
        if text is not None and text in self.labels():
            raise ValueError(f"duplicate label {text!r}")
        self.elements.append(prim)
        return self

    def labels(self) -> list[str]:
        return [t for t in (_text_of(e) for e in self.elements) if t is not None]


def _text_of(prim) -> Optional[str]:
    if isinstance(prim, Point):
        return prim.label
    if isinstance(prim, Label):
        return prim.text
    return None


# ---------------------------------------------------------------- SVG output


def _num(v: float) -> str:
    s = f"{v:.9f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _xy(z: complex) -> tuple[str, str]:
    return _num(z.real), _num(-z.imag)


def _cls(base: str, style: str) -> str:
    return f"{base} {style}" if style else base


def _clip_line(p: complex, direction: complex) -> Optional[tuple[complex, complex]]:
    # Liang-Barsky against the square viewport
    lo, hi = -math.inf, math.inf
    for p0, d in ((p.real, direction.real), (p.imag, direction.imag)):
        if d == 0:
            if not -VIEW <= p0 <= VIEW:
                return None
            continue
        t1, t2 = (-VIEW - p0) / d, (VIEW - p0) / d
        lo, hi = max(lo, min(t1, t2)), min(hi, max(t1, t2))
    if lo >= hi:
        return None
    return p + lo * direction, p + hi * direction


def arc_sweep_flag(g: Geodesic) -> int:
    """SVG sweep flag that draws the short arc of ``g``, the one inside the disk.

    Angles are measured in SVG coordinates (y pointing down), where the flag
    value 1 means increasing angle.
    """
    c = g.center
    x_star, y_star = g.endpoints
    inner = c - g.radius * c / abs(c)

    def svg_angle(z):
        return math.atan2(-(z - c).imag, (z - c).real)

    step = plane.wrap_angle(svg_angle(inner) - svg_angle(x_star))
    return 1 if step > 0 else 0


def _geodesic_path(g: Geodesic) -> str:
    x_star, y_star = g.endpoints
    x0, y0 = _xy(x_star)
    x1, y1 = _xy(y_star)
    if g.is_diameter:
        return f"M {x0} {y0} L {x1} {y1}"
    r = _num(g.radius)
    return f"M {x0} {y0} A {r} {r} 0 0 {arc_sweep_flag(g)} {x1} {y1}"


_STYLE = (
    "circle.unit-circle{fill:none;stroke:#000;stroke-width:0.006}"
    "circle.circle{fill:none;stroke:#000;stroke-width:0.003}"
    "circle.point{fill:#000;stroke:none}"
    ".segment,.line{fill:none;stroke:#000;stroke-width:0.003}"
    "path.geodesic{fill:none;stroke:#000;stroke-width:0.008}"
    ".dashed{stroke-dasharray:0.02 0.015}"
    ".accent{stroke:#b22}"
    "circle.point.accent{fill:#b22}"
    "text.label{font-family:sans-serif;font-size:0.06px;fill:#000}"
)


def _element_svg(e) -> Optional[str]:
    if isinstance(e, UnitCircle):
        return '<circle class="unit-circle" cx="0" cy="0" r="1"/>'
    if isinstance(e, CirclePrim):
        x, y = _xy(e.circle.center)
        return f'<circle class="{_cls("circle", e.style)}" cx="{x}" cy="{y}" r="{_num(e.circle.radius)}"/>'
    if isinstance(e, Segment):
        x0, y0 = _xy(e.p1)
        x1, y1 = _xy(e.p2)
        return f'<line class="{_cls("segment", e.style)}" x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}"/>'
    if isinstance(e, FullLine):
        ends = _clip_line(e.p, e.direction)
        if ends is None:
            return None
        x0, y0 = _xy(ends[0])
        x1, y1 = _xy(ends[1])
        return f'<line class="{_cls("line", e.style)}" x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}"/>'
    if isinstance(e, GeodesicArc):
        return f'<path class="{_cls("geodesic", e.style)}" d="{_geodesic_path(e.geodesic)}"/>'
    if isinstance(e, Point):
        x, y = _xy(e.position)
        dot = f'<circle class="{_cls("point", e.style)}" cx="{x}" cy="{y}" r="{_num(POINT_RADIUS)}"/>'
        lx, ly = _xy(e.position + complex(0.02, 0.02))
        return dot + f'<text class="label" x="{lx}" y="{ly}">{_escape(e.label)}</text>'
    if isinstance(e, Label):
        x, y = _xy(e.anchor)
        return f'<text class="label" x="{x}" y="{y}">{_escape(e.text)}</text>'
    raise TypeError(f"unknown primitive {e!r}")


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def emit_svg(scene: Scene, size: int = 800) -> str:
    """SVG 1.1 document for ``scene``; identical scenes give identical bytes."""
    if size < 1:
        raise ValueError("size must be positive")
    lo, span = _num(-VIEW), _num(2 * VIEW)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
        f'viewBox="{lo} {lo} {span} {span}">',
        f"<style>{_STYLE}</style>",
    ]
    for e in scene.elements:
        s = _element_svg(e)
        if s is not None:
            lines.append(s)
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- figures


def _need(analysis: QuadAnalysis, *names: str):
    out = []
    for n in names:
        v = getattr(analysis, n)
        if v is None:
            reason = analysis.degenerate.get(n, "not computed")
            raise MissingField(f"{n} is unavailable: {reason}")
        out.append(v)
    return out


def _base(analysis: QuadAnalysis) -> Scene:
    s = Scene().add(UnitCircle())
    for name, z in zip("abcd", analysis.quad.vertices):
        s.add(Point(name, z))
    return s


def _polygon(s: Scene, pts, style: str = "") -> None:
    for i in range(len(pts)):
        s.add(Segment(pts[i], pts[(i + 1) % len(pts)], style))


def _quadrilateral(an: QuadAnalysis) -> Scene:
    a, b, c, d = an.quad.vertices
    (w2,) = _need(an, "w2")
    s = _base(an)
    _polygon(s, [a, b, c, d])
    s.add(Segment(a, c, "dashed")).add(Segment(b, d, "dashed"))
    s.add(Point("w2", w2))
    for name in ("w1", "w3"):
        z = getattr(an, name)
        if z is not None:
            s.add(Point(name, z))
    s.add(FullLine(a, b - a, "dashed")).add(FullLine(c, d - c, "dashed"))
    s.add(FullLine(a, d - a, "dashed")).add(FullLine(b, c - b, "dashed"))
    return s


def _ideal(an: QuadAnalysis) -> Scene:
    a, b, c, d = an.quad.vertices
    s = _base(an)
    for u, v in ((a, b), (b, c), (c, d), (d, a)):
        s.add(GeodesicArc(ideal_geodesic(u, v)))
    return s


def _orthocenter(an: QuadAnalysis) -> Scene:
    a, b, c, d = an.quad.vertices
    w1, w2, w3 = _need(an, "w1", "w2", "w3")
    s = _base(an)
    _polygon(s, [a, b, c, d])
    s.add(Point("0", 0j)).add(Point("w1", w1)).add(Point("w2", w2, "accent")).add(Point("w3", w3))
    _polygon(s, [0j, w1, w3])
    # altitudes meet at w2
    s.add(FullLine(w2, 1j * w1, "dashed")).add(FullLine(w2, 1j * w3, "dashed"))
    s.add(FullLine(w2, 1j * (w3 - w1), "dashed"))
    return s


def _rhomboid(an: QuadAnalysis) -> Scene:
    a, b, c, d = an.quad.vertices
    w2, p1, p2, p3, p4, p5 = _need(an, "w2", "p1", "p2", "p3", "p4", "p5")
    s = _base(an)
    _polygon(s, [a, b, c, d])
    for u, v in ((a, b), (b, c), (c, d), (d, a)):
        s.add(GeodesicArc(ideal_geodesic(u, v), "dashed"))
    s.add(Point("w2", w2))
    for p, x in ((p1, a), (p2, b), (p3, c), (p4, a)):
        s.add(CirclePrim(Circle(p, abs(p - x))))
    _polygon(s, [p1, p2, p3, p4], "accent")
    for i, p in enumerate((p1, p2, p3, p4, p5), 1):
        s.add(Point(f"p{i}", p, "accent"))
    return s


def _orthogonal_circle(an: QuadAnalysis) -> Scene:
    a, b, c, d = an.quad.vertices
    co, p, q, w, w1 = _need(an, "co", "p", "q", "w", "w1")
    s = _base(an)
    s.add(CirclePrim(co, "dashed"))
    s.add(GeodesicArc(ideal_geodesic(a, c))).add(GeodesicArc(ideal_geodesic(b, d)))
    s.add(GeodesicArc(ideal_geodesic(p, q), "accent"))
    s.add(Point("w", w, "accent")).add(Point("w1", w1)).add(Point("p", p)).add(Point("q", q))
    for name in ("c1", "c2", "w3"):
        z = getattr(an, name)
        if z is not None:
            s.add(Point(name, z))
    # c2, w1, c1, w3 share a line: the perpendicular bisector of w and its inverse
    s.add(FullLine(w1, 1j * w, "dashed"))
    return s


def _midpoint(x: complex, y: complex) -> Scene:
    z = hyperbolic_midpoint(x, y)
    s = Scene().add(UnitCircle())
    s.add(GeodesicArc(geodesic_through(x, y)))
    s.add(Point("0", 0j)).add(Point("x", x)).add(Point("y", y)).add(Point("z", z, "accent"))
    u = point_u(x, y)
    s.add(Point("u", u))
    s.add(Segment(0j, u, "dashed"))
    s.add(Segment(x, y, "dashed"))
    return s


def _five_points(x: complex, y: complex) -> Scene:
    try:
        fp = five_points(x, y)
    except DegenerateConfiguration as exc:
        raise MissingField(f"five points unavailable: {exc}") from exc
    z = hyperbolic_midpoint(x, y)
    g = geodesic_through(x, y)
    s = Scene().add(UnitCircle())
    s.add(GeodesicArc(g))
    s.add(Point("0", 0j)).add(Point("x", x)).add(Point("y", y)).add(Point("z", z, "accent"))
    xs, ys = g.endpoints
    s.add(Point("x*", xs)).add(Point("y*", ys))
    s.add(FullLine(0j, z, "dashed"))
    for name, p in fp.as_dict().items():
        if p is not INF:
            s.add(Point(name, p, "accent"))
    return s


def _symmetrization(an: QuadAnalysis) -> Scene:
    steps = symmetrization_construction(an.quad)
    if steps.degenerate:
        raise MissingField(f"symmetrization unavailable: {steps.degenerate}")
    a, b, c, d = an.quad.vertices
    s = _base(an)
    s.add(GeodesicArc(ideal_geodesic(a, c), "dashed")).add(GeodesicArc(ideal_geodesic(b, d), "dashed"))
    line_point, line_dir = steps.center_line
    s.add(FullLine(line_point, line_dir, "dashed"))
    s.add(FullLine(0j, steps.w))
    s.add(Point("w", steps.w, "accent"))
    r = steps.result
    s.add(GeodesicArc(ideal_geodesic(r.a, r.c), "accent")).add(GeodesicArc(ideal_geodesic(r.b, r.d), "accent"))
    for name, z in zip(("a_s", "b_s", "c_s", "d_s"), r.vertices):
        s.add(Point(name, z, "accent"))
    for name, z in (("c1s", steps.c1s), ("c2s", steps.c2s)):
        if z is not INF:
            s.add(Point(name, z))
    return s


def build_figure(
    name: str,
    analysis: Optional[QuadAnalysis] = None,
    *,
    x: Optional[complex] = None,
    y: Optional[complex] = None,
) -> Scene:
    """Scene for figure ``name``.

    The ``midpoint`` and ``five-points`` figures use the disk points ``x, y``;
    all others use the quadruple analysis.
    """
    if name in ("midpoint", "five-points"):
        if x is None or y is None:
            raise MissingField(f"figure {name!r} needs the points x and y")
        return (_midpoint if name == "midpoint" else _five_points)(complex(x), complex(y))
    builders = {
        "quadrilateral": _quadrilateral,
        "ideal": _ideal,
        "orthocenter": _orthocenter,
        "rhomboid": _rhomboid,
        "orthogonal-circle": _orthogonal_circle,
        "symmetrization": _symmetrization,
    }
    if name not in builders:
        raise ValueError(f"unknown figure {name!r}; choose from {', '.join(FIGURES)}")
    if analysis is None:
        raise MissingField(f"figure {name!r} needs a quadruple")
    try:
        return builders[name](analysis)
    except MissingField:
        raise
    except GeometryError as exc:
        raise MissingField(f"{type(exc).__name__}: {exc}") from exc
