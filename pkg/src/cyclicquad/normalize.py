"""Moving a quadruple to a canonical position with a Mobius map.

Two target positions are offered: ``(0, 1, p, INF)`` and the real, origin
symmetric ``(-1, -y, y, 1)``. :func:`symmetrize` instead keeps the points on
the unit circle and rotates them hyperbolically about the crossing point of
the diagonal geodesics until they are mirror symmetric about a diameter.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import plane
from .errors import DegenerateInput, PoleInDomain
from .hyperbolic import MobiusMap, circle_meets_unit, ideal_geodesic, mobius_compose, mobius_inverse
from .plane import INF, ExtendedPoint
from .quadrilateral import OrderedQuadruple, diagonal_hyperbolic_intersection, vertex_intersections

COST_SAMPLES = 20_000
SYMMETRIC_TOL = 1e-12


@dataclass(frozen=True)
class CanonicalForm:
    map: MobiusMap
    parameter: complex
    images: tuple[ExtendedPoint, ExtendedPoint, ExtendedPoint, ExtendedPoint]
    lipschitz_cost: float


def _distinct(points) -> list[ExtendedPoint]:
    pts = [plane.as_point(z) for z in points]
    if sum(p is INF for p in pts) > 1:
        raise DegenerateInput("at most one point may be at infinity")
    finite = plane.iter_finite(pts)
    for i, p in enumerate(finite):
        for q in finite[i + 1:]:
            if abs(p - q) <= 1e-12 * max(1.0, abs(p), abs(q)):
                raise DegenerateInput(f"repeated point {p!r}")
    return pts


def zero_one_inf_map(a: ExtendedPoint, b: ExtendedPoint, c: ExtendedPoint, d: ExtendedPoint) -> MobiusMap:
    """The map ``z -> (z - a)(b - d) / ((z - d)(b - a))`` sending ``a, b, d`` to ``0, 1, INF``."""
    a, b, c, d = _distinct((a, b, c, d))
    if a is INF:
        return MobiusMap(0, b - d, 1, -d)
    if b is INF:
        return MobiusMap(1, -a, 1, -d)
    if d is INF:
        return MobiusMap(1, -a, 0, b - a)
    return MobiusMap(b - d, -a * (b - d), b - a, -d * (b - a))


def image_of_c(a: ExtendedPoint, b: ExtendedPoint, c: ExtendedPoint, d: ExtendedPoint) -> ExtendedPoint:
    """``zero_one_inf_map(a, b, c, d)(c)`` in factored form.

    Expanding the map loses accuracy when ``c`` is close to ``d``; the
    factored differences are exact for nearby points.
    """
    a, b, c, d = _distinct((a, b, c, d))
    if c is INF:
        return (b - d) / (b - a)
    if d is INF:
        return (c - a) / (b - a)
    if a is INF:
        return (b - d) / (c - d)
    if b is INF:
        return (c - a) / (c - d)
    return (c - a) * (b - d) / ((c - d) * (b - a))


def _canonical_p(a, b, c, d) -> complex:
    p = image_of_c(a, b, c, d)
    if p is INF:
        raise DegenerateInput("c coincides with d")
    pts = [plane.as_point(z) for z in (a, b, c, d)]
    if all(z is not INF and abs(abs(z) - 1.0) <= plane.UNIT_TOL for z in pts):
        # concyclic points have a real cross ratio; the imaginary part is rounding in the vertices,
        # amplified by 1/|c - d| when c and d are close
        return complex(p.real, 0.0)
    return p


def _cost_or_inf(m: MobiusMap, seed: int) -> float:
    try:
        return lipschitz_cost(m, COST_SAMPLES, seed)
    except PoleInDomain:
        return math.inf


def normalize_zero_one_inf(a, b, c, d, seed: int = 0) -> CanonicalForm:
    """Send ``(a, b, c, d)`` to ``(0, 1, p, INF)``.

    For four counterclockwise points on the unit circle ``p`` is real, above
    one, and equal to their absolute cross ratio. ``lipschitz_cost`` is
    ``inf`` when the map has a pole in the closed disk, which is always the
    case for unit-circle input since ``d`` goes to infinity.
    """
    h = zero_one_inf_map(a, b, c, d)
    p = _canonical_p(a, b, c, d)
    images = (0j, 1 + 0j, p, INF)
    return CanonicalForm(h, p, images, _cost_or_inf(h, seed))


def symmetric_parameter(p: complex) -> complex:
    """The ``y`` with ``((1 + y) / (1 - y))^2 = p`` and ``|y| <= 1``.

    The principal square root has non-negative real part, which is exactly
    the condition ``|y| <= 1``.
    """
    s = cmath.sqrt(p)
    return (s - 1) / (s + 1)


def normalize_symmetric(a, b, c, d, seed: int = 0) -> CanonicalForm:
    """Send ``(a, b, c, d)`` to ``(-1, -y, y, 1)`` with ``|y| <= 1``.

    The map is the ``(0, 1, p, INF)`` map of the source followed by the
    inverse of the one of the target; both targets share the same ``p``.
    """
    h = zero_one_inf_map(a, b, c, d)
    y = symmetric_parameter(_canonical_p(a, b, c, d))
    if abs(y) <= 1e-15:
        raise DegenerateInput("cross ratio 1: the middle points coincide")
    g = mobius_compose(mobius_inverse(zero_one_inf_map(-1, -y, y, 1)), h)
    images = (-1 + 0j, -y, y, 1 + 0j)
    return CanonicalForm(g, y, images, _cost_or_inf(g, seed))


def lipschitz_cost(m: MobiusMap, samples: int, seed: int = 0) -> float:
    """Sampled lower estimate of the euclidean Lipschitz constant of ``m`` on the closed disk.

    Each sample contributes one uniform pair and one short pair placed near
    the unit circle, where the constant of a disk automorphism is attained.
    The random draws for ``n`` samples are a prefix of those for ``n' > n``,
    so the estimate never decreases as ``samples`` grows.
    """
    if samples < 1:
        raise ValueError("samples must be positive")
    pole = m.pole
    if pole is not INF and abs(pole) <= 1.0 + 1e-12:
        raise PoleInDomain(f"pole {pole} lies in the closed unit disk")
    u = np.random.default_rng(seed).random((samples, 7))

    def in_disk(r, theta):
        return r * np.exp(2j * np.pi * theta)

    x1 = in_disk(np.sqrt(u[:, 0]), u[:, 1])
    x2 = in_disk(np.sqrt(u[:, 2]), u[:, 3])
    # near-boundary pairs: radius 1 - O(u^4), step 1e-6 in a random direction
    x3 = in_disk(1.0 - 0.05 * u[:, 4] ** 4, u[:, 5])
    x4 = x3 + 1e-6 * np.exp(2j * np.pi * u[:, 6])
    x4 = np.where(np.abs(x4) > 1.0, x4 / np.abs(x4), x4)
    p = np.concatenate([x1, x3])
    q = np.concatenate([x2, x4])

    def f(z):
        return (m.alpha * z + m.beta) / (m.gamma * z + m.delta)

    gap = np.abs(p - q)
    ok = gap > 0
    ratios = np.abs(f(p[ok]) - f(q[ok])) / gap[ok]
    return float(np.max(ratios))


@dataclass(frozen=True)
class SymmetrizationSteps:
    """Intermediate objects of :func:`symmetrization_construction`.

    ``center_line`` is ``(point, direction)``; tangents are unit vectors at
    ``w`` pointing towards ``a``, ``b`` and ``q`` respectively.
    """

    quad: OrderedQuadruple
    w1: ExtendedPoint
    w3: ExtendedPoint
    w: complex
    center_line: Optional[tuple[complex, complex]]
    c1: ExtendedPoint
    c2: ExtendedPoint
    tangent_ac: Optional[complex]
    tangent_bd: Optional[complex]
    tangent_pq: Optional[complex]
    rotation: float
    c1s: ExtendedPoint
    c2s: ExtendedPoint
    result: OrderedQuadruple
    degenerate: Optional[str] = None


def _endpoint_ahead(center: ExtendedPoint, w: complex, tangent: complex) -> complex:
    """Ideal endpoint reached from ``w`` moving along ``tangent`` on the geodesic with this center."""
    if center is INF:
        return tangent
    r = abs(center - w)
    ends = circle_meets_unit(center, r)
    return max(ends, key=lambda e: ((e - w) * tangent.conjugate()).real / abs(e - w))


def _center_for_tangent(w: complex, tangent: complex, line_point: complex, line_dir: complex) -> ExtendedPoint:
    # center of the geodesic through w with this tangent: on the normal at w and on the center line
    return plane.line_intersection(w, w + 1j * tangent, line_point, line_point + line_dir)


def symmetrization_construction(q: OrderedQuadruple) -> SymmetrizationSteps:
    """Rotate ``q`` hyperbolically about ``w`` so it becomes symmetric about the diameter through ``w``.

    The rotation is carried out on tangent directions at ``w``: the geodesic
    ``J*[p, q]`` (the mirror swapping ``a <-> b``, ``c <-> d``) is turned until it
    crosses ``L[0, w]`` at a right angle, and each diagonal geodesic is
    rebuilt from its rotated tangent. When ``w = 0`` the quadruple is a
    rectangle, already symmetric about two diameters, and is returned as is.
    """
    a, b, c, d = q.vertices
    w1, _, w3 = vertex_intersections(q)
    w = diagonal_hyperbolic_intersection(q)
    g_ac, g_bd = ideal_geodesic(c, a), ideal_geodesic(d, b)
    c1 = INF if g_ac.is_diameter else g_ac.center
    c2 = INF if g_bd.is_diameter else g_bd.center
    if abs(w) <= SYMMETRIC_TOL:
        return SymmetrizationSteps(
            q, w1, w3, w, None, c1, c2, None, None, None, 0.0, c1, c2, q,
            degenerate="w = 0: the quadruple is a rectangle, symmetric about two diameters",
        )
    # centers of all geodesics through w lie on the perpendicular bisector of w and 1/conj(w),
    # which is L[w1, w3] whenever those points are finite
    line_point = (w + plane.inverse_point(w)) / 2
    line_dir = 1j * w / abs(w)
    t_ac, t_bd = g_ac.tangent_at(w), g_bd.tangent_at(w)
    t_pq = w / abs(w) if w1 is INF else 1j * (w1 - w) / abs(w1 - w)
    # turn l_pq perpendicular to L[0, w]; the smaller of the two possible turns
    rotation = plane.wrap_angle(cmath.phase(w) + math.pi / 2 - cmath.phase(t_pq), math.pi)
    turn = cmath.exp(1j * rotation)
    t_as, t_bs = t_ac * turn, t_bd * turn
    c1s = _center_for_tangent(w, t_as, line_point, line_dir)
    c2s = _center_for_tangent(w, t_bs, line_point, line_dir)
    a_s, c_s = _endpoint_ahead(c1s, w, t_as), _endpoint_ahead(c1s, w, -t_as)
    b_s, d_s = _endpoint_ahead(c2s, w, t_bs), _endpoint_ahead(c2s, w, -t_bs)
    result = OrderedQuadruple(a_s, b_s, c_s, d_s)
    return SymmetrizationSteps(
        q, w1, w3, w, (line_point, line_dir), c1, c2, t_ac, t_bd, t_pq, rotation, c1s, c2s, result
    )


def symmetrize(q: OrderedQuadruple) -> OrderedQuadruple:
    """Cross-ratio preserving repositioning of ``q``, mirror symmetric about the diameter through ``w``.

    ``a`` and ``d`` become mirror images, as do ``b`` and ``c``.
    """
    return symmetrization_construction(q).result


def reflect_in_diameter(z: complex, direction: complex) -> complex:
    e = direction / abs(direction)
    return e * e * z.conjugate()
