"""Euclidean and hyperbolic structure of a quadrilateral inscribed in the unit circle.

Vertices ``a, b, c, d`` are unit complex numbers in counterclockwise order.
Opposite sides meet at ``w1`` (sides ab, cd) and ``w3`` (sides ad, bc); the
diagonals meet at ``w2`` and the diagonal geodesics at ``w``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field, fields
from typing import Optional

from . import plane
from .errors import (
    DegenerateConfiguration,
    DegenerateInput,
    DegenerateQuadruple,
    GeometryError,
    NoInteriorRoot,
    NotPositivelyOrdered,
    TangentCircles,
)
from .hyperbolic import hyperbolic_distance, ideal_geodesic
from .plane import INF, Circle, ExtendedPoint

SQRT2_LOG = math.log(1.0 + math.sqrt(2.0))


@dataclass(frozen=True)
class OrderedQuadruple:
    """Four distinct unit complex numbers listed counterclockwise.

    Inputs within ``1e-9`` of the unit circle are accepted and projected onto
    it.
    """

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        pts = [plane.as_point(z) for z in (self.a, self.b, self.c, self.d)]
        plane.check_unimodular(*pts)
        pts = [z / abs(z) for z in pts]
        for i in range(4):
            for j in range(i + 1, 4):
                if abs(pts[i] - pts[j]) <= 1e-9:
                    raise DegenerateInput(f"vertices {i} and {j} coincide")
        rel = [cmath.phase(z / pts[0]) % (2 * math.pi) for z in pts[1:]]
        if not (0 < rel[0] < rel[1] < rel[2] < 2 * math.pi):
            raise NotPositivelyOrdered(
                "vertices are not in counterclockwise order "
                f"(angles relative to a: {[round(math.degrees(r), 6) for r in rel]})"
            )
        for name, z in zip("abcd", pts):
            object.__setattr__(self, name, z)

    @classmethod
    def from_angles(cls, angles, degrees: bool = False) -> "OrderedQuadruple":
        rad = [math.radians(t) if degrees else float(t) for t in angles]
        return cls(*(cmath.exp(1j * t) for t in rad))

    @property
    def vertices(self) -> tuple[complex, complex, complex, complex]:
        return (self.a, self.b, self.c, self.d)

    def angles(self, degrees: bool = False) -> list[float]:
        rad = [cmath.phase(z) % (2 * math.pi) for z in self.vertices]
        return [math.degrees(t) for t in rad] if degrees else rad

    def rotated(self, theta: float) -> "OrderedQuadruple":
        r = cmath.exp(1j * theta)
        return OrderedQuadruple(*(r * z for z in self.vertices))

    def cross_ratio(self) -> float:
        return plane.cross_ratio(self.a, self.b, self.c, self.d)


def vertex_intersections(q: OrderedQuadruple) -> tuple[ExtendedPoint, complex, ExtendedPoint]:
    a, b, c, d = q.vertices
    lis = plane.unit_line_intersection
    return lis(a, b, c, d), lis(a, c, b, d), lis(a, d, b, c)


def diagonal_hyperbolic_intersection(q: OrderedQuadruple) -> complex:
    """Crossing point of the hyperbolic diagonals ``J*[a, c]`` and ``J*[b, d]``.

    It is the root inside the disk of
    ``(a - b + c - d) z^2 - 2 (ac - bd) z + (ac (b + d) - bd (a + c)) = 0``.
    """
    a, b, c, d = q.vertices
    lead = a - b + c - d
    half_mid = a * c - b * d
    const = a * c * (b + d) - b * d * (a + c)
    if abs(lead) <= 1e-12 * abs(half_mid):
        return const / (2 * half_mid)
    root = cmath.sqrt(half_mid * half_mid - lead * const)
    # sign-matched so the sum does not cancel
    if (half_mid.conjugate() * root).real < 0:
        root = -root
    big = half_mid + root
    candidates = [big / lead, const / big] if big != 0 else [half_mid / lead]
    inside = [z for z in candidates if abs(z) < 1.0 - 1e-12]
    if not inside:
        raise NoInteriorRoot(f"roots {candidates} are not inside the disk")
    return min(inside, key=abs)


def opposite_side_distances(q: OrderedQuadruple) -> tuple[float, float]:
    """Hyperbolic distances ``d1`` (sides ad, bc) and ``d2`` (sides ab, cd)."""
    a, b, c, d = q.vertices
    out = []
    for cr in (plane.cross_ratio(a, b, c, d), plane.cross_ratio(d, a, b, c)):
        if cr <= 1.0 + 1e-12:
            raise DegenerateQuadruple(f"cross ratio {cr} is not above 1")
        out.append(2.0 * math.atanh(math.sqrt(1.0 / cr)))
    return out[0], out[1]


def _altitude_direction(far: ExtendedPoint, side_dir: complex) -> complex:
    """Direction perpendicular to ``L[0, far]``; for ``far`` at INF, to its side pair."""
    return 1j * (side_dir if far is INF else far)


def _cross(x: complex, y: complex) -> float:
    return (x.conjugate() * y).imag


def _chord_hit(u: complex, v: complex, p: complex, e: complex) -> tuple[complex, float]:
    """Where the line ``p + s e`` meets the chord ``[u, v]``, and ``1 - |t|^2`` there.

    For ``t = u + s (v - u)`` with ``u, v`` on the unit circle,
    ``1 - |t|^2 = s (1 - s) |u - v|^2``, which stays accurate near the circle.
    """
    den = _cross(e, v - u)
    if abs(den) <= plane.PARALLEL_TOL * abs(e) * abs(v - u):
        raise DegenerateConfiguration("line is parallel to the side")
    s = _cross(e, p - u) / den
    return u + s * (v - u), s * (1.0 - s) * abs(u - v) ** 2


def _feet_and_factors(q: OrderedQuadruple):
    a, b, c, d = q.vertices
    w1, w2, w3 = vertex_intersections(q)
    e3 = _altitude_direction(w1, b - a)
    e1 = _altitude_direction(w3, d - a)
    hits = [_chord_hit(a, b, w2, e3), _chord_hit(b, c, w2, e1), _chord_hit(c, d, w2, e3), _chord_hit(a, d, w2, e1)]
    for i, (t, f) in enumerate(hits, 1):
        if not f > 0:
            raise DegenerateConfiguration(f"foot t{i} = {t} is not inside the disk")
    _, f2 = _chord_hit(a, c, b, d - b)
    return hits, (w2, f2)


def lambert_feet(q: OrderedQuadruple) -> tuple[complex, complex, complex, complex]:
    """Feet ``t1..t4`` where the lines ``L[w3, w2]`` and ``L[w1, w2]`` cut the sides.

    ``w2`` is the orthocenter of ``0, w1, w3``, so ``L[w3, w2]`` is the line
    through ``w2`` perpendicular to ``L[0, w1]`` (and ``L[w1, w2]`` the one
    perpendicular to ``L[0, w3]``). Using that form keeps the feet accurate
    when ``w1`` or ``w3`` is far away, and gives the limit position when it is
    at infinity.
    """
    hits, _ = _feet_and_factors(q)
    return tuple(t for t, _ in hits)


def feet_ratios(q: OrderedQuadruple) -> tuple[float, float]:
    """``(sh rho(w2,t2)/2 + sh rho(w2,t4)/2) / sh rho(t2,t4)/2`` and its t1, t3 analogue.

    The first ratio equals ``th(d2/2)`` and the second ``th(d1/2)``.
    """
    hits, (w2, f2) = _feet_and_factors(q)

    def sh(x, fx, y, fy):
        return abs(x - y) / math.sqrt(fx * fy)

    (t1, f1), (t2, g2), (t3, f3), (t4, f4) = hits
    r1 = (sh(w2, f2, t2, g2) + sh(w2, f2, t4, f4)) / sh(t2, g2, t4, f4)
    r2 = (sh(w2, f2, t1, f1) + sh(w2, f2, t3, f3)) / sh(t1, f1, t3, f3)
    return r1, r2


def rhomboid_centers(q: OrderedQuadruple) -> tuple[complex, complex, complex, complex, complex]:
    """Centers of ``C[a,b,w2], C[b,c,w2], C[c,d,w2], C[a,d,w2]`` and the crossing of their diagonals.

    The centers use their closed forms, e.g. ``m(a, b, w2) = ab(c - d) / (ac - bd)``,
    which stay accurate when three of the vertices cluster.
    """
    a, b, c, d = q.vertices
    ac_bd = a * c - b * d
    p1 = a * b * (c - d) / ac_bd
    p2 = b * c * (a - d) / ac_bd
    p3 = c * d * (a - b) / ac_bd
    p4 = a * d * (c - b) / ac_bd
    p5 = plane.line_intersection(p1, p3, p2, p4)
    if p5 is INF:
        raise DegenerateConfiguration("rhomboid diagonals are parallel")
    return p1, p2, p3, p4, p5


def _second_intersection(w2: complex, p: complex, r: complex, scale: float) -> complex:
    # two circles through w2 meet again at the mirror image of w2 in the line of centers
    v = plane.reflect_in_line(w2, p, r)
    if abs(v - w2) <= 1e-12 * max(scale, 1.0):
        raise TangentCircles("the circles touch only at w2")
    return v


def secondary_points(q: OrderedQuadruple) -> tuple[complex, complex]:
    """``v1``: second point of ``C[a,b,w2] & C[c,d,w2]``; ``v2``: of ``C[b,c,w2] & C[a,d,w2]``."""
    p1, p2, p3, p4, _ = rhomboid_centers(q)
    w2 = vertex_intersections(q)[1]
    scale = max(abs(p1), abs(p2), abs(p3), abs(p4))
    return _second_intersection(w2, p1, p3, scale), _second_intersection(w2, p2, p4, scale)


@dataclass(frozen=True)
class OrthogonalCircle:
    co: Circle
    p: complex
    q: complex
    c1: ExtendedPoint
    c2: ExtendedPoint


def ideal_center(u: complex, v: complex) -> ExtendedPoint:
    """Center ``2uv / (u + v)`` of the circle orthogonal to the unit circle through ``u, v``."""
    s = u + v
    if abs(s) <= plane.UNIT_TOL:
        return INF
    return 2 * u * v / s


def orthogonal_circle_and_bisector(q: OrderedQuadruple) -> OrthogonalCircle:
    """Circle ``C_o`` orthogonal to the unit circle centered at ``w1`` and its ideal points."""
    a, b, c, d = q.vertices
    w1 = vertex_intersections(q)[0]
    if w1 is INF:
        raise DegenerateConfiguration("w1 is at infinity; C_o degenerates to a line")
    radius = math.sqrt(abs(w1) ** 2 - 1.0)
    cc = w1.conjugate()
    p, qq = (1 - 1j * radius) / cc, (1 + 1j * radius) / cc
    return OrthogonalCircle(Circle(w1, radius), p, qq, ideal_center(a, c), ideal_center(b, d))


def _line_angle(direction: complex) -> float:
    return cmath.phase(direction) % math.pi


def bisector_error(q: OrderedQuadruple) -> float:
    """Angular defect (radians) of ``J*[p, q]`` as a bisector of the diagonal geodesics at ``w``."""
    a, b, c, d = q.vertices
    oc = orthogonal_circle_and_bisector(q)
    w = diagonal_hyperbolic_intersection(q)
    t_ac = ideal_geodesic(a, c).tangent_at(w)
    t_bd = ideal_geodesic(b, d).tangent_at(w)
    t_pq = ideal_geodesic(oc.p, oc.q).tangent_at(w)
    # reflecting one diagonal's tangent line in the bisector gives the other
    defect = _line_angle(t_ac) + _line_angle(t_bd) - 2 * _line_angle(t_pq)
    return abs(plane.wrap_angle(defect, math.pi)) / 2


POINT_FIELDS = (
    "w1", "w2", "w3", "w", "t1", "t2", "t3", "t4",
    "p1", "p2", "p3", "p4", "p5", "v1", "v2", "p", "q", "c1", "c2",
)


@dataclass
class QuadAnalysis:
    """Every derived quantity of a quadruple.

    A field is ``None`` when its construction degenerates for this input; the
    reason is recorded in :attr:`degenerate` under the field name.
    """

    quad: OrderedQuadruple
    cross_ratio: Optional[float] = None
    w1: Optional[complex] = None
    w2: Optional[complex] = None
    w3: Optional[complex] = None
    w: Optional[complex] = None
    d1: Optional[float] = None
    d2: Optional[float] = None
    t1: Optional[complex] = None
    t2: Optional[complex] = None
    t3: Optional[complex] = None
    t4: Optional[complex] = None
    r1: Optional[float] = None
    r2: Optional[float] = None
    p1: Optional[complex] = None
    p2: Optional[complex] = None
    p3: Optional[complex] = None
    p4: Optional[complex] = None
    p5: Optional[complex] = None
    v1: Optional[complex] = None
    v2: Optional[complex] = None
    co: Optional[Circle] = None
    p: Optional[complex] = None
    q: Optional[complex] = None
    c1: Optional[complex] = None
    c2: Optional[complex] = None
    degenerate: dict[str, str] = field(default_factory=dict)

    @classmethod
    def field_names(cls) -> list[str]:
        return [f.name for f in fields(cls) if f.name not in ("quad", "degenerate")]

    def status(self, name: str) -> str:
        return "degenerate" if name in self.degenerate else "computed"


def analyze(q: OrderedQuadruple) -> QuadAnalysis:
    """Compute everything; degenerate pieces are flagged instead of raised."""
    out = QuadAnalysis(quad=q)

    def attempt(names, fn):
        try:
            values = fn()
        except GeometryError as exc:
            for n in names:
                out.degenerate[n] = f"{type(exc).__name__}: {exc}"
            return
        if len(names) == 1:
            values = (values,)
        for n, v in zip(names, values):
            if v is INF:
                out.degenerate[n] = "point at infinity"
            else:
                setattr(out, n, v)

    attempt(["cross_ratio"], q.cross_ratio)
    attempt(["w1", "w2", "w3"], lambda: vertex_intersections(q))
    attempt(["w"], lambda: diagonal_hyperbolic_intersection(q))
    attempt(["d1", "d2"], lambda: opposite_side_distances(q))
    attempt(["t1", "t2", "t3", "t4"], lambda: lambert_feet(q))
    attempt(["r1", "r2"], lambda: feet_ratios(q))
    attempt(["p1", "p2", "p3", "p4", "p5"], lambda: rhomboid_centers(q))
    attempt(["v1", "v2"], lambda: secondary_points(q))

    def ortho():
        oc = orthogonal_circle_and_bisector(q)
        return oc.co, oc.p, oc.q

    attempt(["co", "p", "q"], ortho)
    a, b, c, d = q.vertices
    attempt(["c1", "c2"], lambda: (ideal_center(a, c), ideal_center(b, d)))
    return out


def hyperbolic_feet_distances(q: OrderedQuadruple) -> tuple[float, float, float, float]:
    """``rho(w2, t_i)`` for i = 1..4."""
    w2 = vertex_intersections(q)[1]
    return tuple(hyperbolic_distance(w2, t) for t in lambert_feet(q))
