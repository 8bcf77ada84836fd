"""Poincare-disk machinery: metric, Mobius maps, geodesics.

Interior points are plain ``complex`` values with modulus below one; ideal
(boundary) points are unit-modulus complex values. The two roles are checked
separately by :func:`check_disk` and :func:`plane.check_unimodular`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import plane
from .errors import DegenerateMap, IdenticalPoints, OutOfDisk
from .plane import INF, ExtendedPoint

DISK_TOL = 1e-12
DIAMETER_TOL = 1e-11


def check_disk(*points: complex) -> None:
    for z in points:
        if z is INF or not abs(z) < 1.0 - DISK_TOL:
            raise OutOfDisk(f"{z!r} is not strictly inside the unit disk")


def _one_minus_sq(x: complex) -> float:
    r = abs(x)
    return (1.0 - r) * (1.0 + r)


def hyperbolic_distance(x: complex, y: complex) -> float:
    x, y = complex(x), complex(y)
    check_disk(x, y)
    return 2.0 * math.asinh(abs(x - y) / math.sqrt(_one_minus_sq(x) * _one_minus_sq(y)))


def distance_cosh_form(x: complex, y: complex) -> float:
    """The metric recovered from the cross ratio ``|x, x*, y*, y|``.

    A point at the origin has its inverse at infinity, which the cross-ratio
    convention already handles.
    """
    x, y = complex(x), complex(y)
    check_disk(x, y)
    if x == y:
        return 0.0
    cr = plane.cross_ratio(x, plane.inverse_point(x), plane.inverse_point(y), y)
    return 2.0 * math.acosh(math.sqrt(max(cr, 1.0)))


def ahlfors_bracket(x: complex, y: complex) -> float:
    x, y = complex(x), complex(y)
    check_disk(x, y)
    return math.sqrt(_one_minus_sq(x) * _one_minus_sq(y) + abs(x - y) ** 2)


@dataclass(frozen=True)
class MobiusMap:
    """``z -> (alpha z + beta) / (gamma z + delta)``."""

    alpha: complex
    beta: complex
    gamma: complex
    delta: complex

    def __post_init__(self):
        if not abs(self.determinant) > 1e-12:
            raise DegenerateMap(f"determinant {self.determinant} vanishes")

    @property
    def determinant(self) -> complex:
        return self.alpha * self.delta - self.beta * self.gamma

    @property
    def pole(self) -> ExtendedPoint:
        """The point sent to infinity (INF for affine maps)."""
        return INF if self.gamma == 0 else -self.delta / self.gamma

    def __call__(self, z: ExtendedPoint) -> ExtendedPoint:
        return mobius_apply(self, z)

    def __matmul__(self, other: "MobiusMap") -> "MobiusMap":
        return mobius_compose(self, other)

    @classmethod
    def identity(cls) -> "MobiusMap":
        return cls(1, 0, 0, 1)


def mobius_apply(m: MobiusMap, z: ExtendedPoint) -> ExtendedPoint:
    if z is INF:
        return INF if m.gamma == 0 else m.alpha / m.gamma
    z = complex(z)
    den = m.gamma * z + m.delta
    if abs(den) <= 1e-14 * (abs(m.gamma * z) + abs(m.delta)):
        return INF
    return (m.alpha * z + m.beta) / den


def mobius_compose(m1: MobiusMap, m2: MobiusMap) -> MobiusMap:
    """The map acting as ``m1(m2(z))``."""
    return MobiusMap(
        m1.alpha * m2.alpha + m1.beta * m2.gamma,
        m1.alpha * m2.beta + m1.beta * m2.delta,
        m1.gamma * m2.alpha + m1.delta * m2.gamma,
        m1.gamma * m2.beta + m1.delta * m2.delta,
    )


def mobius_inverse(m: MobiusMap) -> MobiusMap:
    return MobiusMap(m.delta, -m.beta, -m.gamma, m.alpha)


def t_a_map(a: complex) -> MobiusMap:
    """The disk automorphism ``z -> (z - a) / (1 - conj(a) z)``."""
    a = complex(a)
    check_disk(a)
    return MobiusMap(1, -a, -a.conjugate(), 1)


def lipschitz_t_a(a: complex) -> float:
    a = complex(a)
    check_disk(a)
    r = abs(a)
    return (1.0 + r) / (1.0 - r)


@dataclass(frozen=True)
class Geodesic:
    """A hyperbolic line: a diameter or an arc orthogonal to the unit circle.

    ``endpoints`` are the ideal points ``(x_*, y_*)`` in traversal order. For
    a diameter ``direction`` is the unit vector from ``x_*`` to ``y_*``.
    """

    kind: str
    endpoints: tuple[complex, complex]
    center: Optional[complex] = None
    radius: Optional[float] = None
    direction: Optional[complex] = None

    @property
    def is_diameter(self) -> bool:
        return self.kind == "diameter"

    def residual(self, z: complex) -> float:
        """Euclidean distance from ``z`` to the carrier line or circle."""
        if self.is_diameter:
            return plane.distance_to_line(z, 0j, self.direction)
        return abs(abs(z - self.center) - self.radius)

    def tangent_at(self, z: complex) -> complex:
        """Unit tangent of the carrier at ``z``, oriented from ``x_*`` to ``y_*``."""
        if self.is_diameter:
            return self.direction
        t = 1j * (z - self.center)
        t /= abs(t)
        # orientation: the arc runs x_* -> y_*, so compare with the chord
        x_star, y_star = self.endpoints
        if ((y_star - x_star) * t.conjugate()).real < 0:
            t = -t
        return t

    def reversed(self) -> "Geodesic":
        d = None if self.direction is None else -self.direction
        return Geodesic(self.kind, self.endpoints[::-1], self.center, self.radius, d)

    def points(self, t: np.ndarray) -> np.ndarray:
        """Points of the open geodesic for parameters ``t`` in ``(0, 1)``.

        The parameter is proportional to the euclidean angle along the arc
        (or to euclidean length along a diameter).
        """
        t = np.asarray(t, dtype=float)
        x_star, y_star = self.endpoints
        if self.is_diameter:
            return x_star + t * (y_star - x_star)
        th0 = np.angle(x_star - self.center)
        sweep = plane.wrap_angle(float(np.angle(y_star - self.center)) - th0)
        return self.center + self.radius * np.exp(1j * (th0 + t * sweep))


def _diameter(x_star: complex, y_star: complex) -> Geodesic:
    direction = (y_star - x_star) / abs(y_star - x_star)
    return Geodesic("diameter", (x_star, y_star), direction=direction)


def _orthogonal_arc(center: complex, x_star: complex, y_star: complex) -> Geodesic:
    radius = math.sqrt(abs(center) ** 2 - 1.0)
    return Geodesic("arc", (x_star, y_star), center=center, radius=radius)


def circle_meets_unit(center: complex, radius: float) -> tuple[complex, complex]:
    """Unit-circle points of a circle orthogonal to it: ``(1 -+ i r) / conj(c)``."""
    cc = center.conjugate()
    return (1 - 1j * radius) / cc, (1 + 1j * radius) / cc


def geodesic_through(x: complex, y: complex) -> Geodesic:
    x, y = complex(x), complex(y)
    check_disk(x, y)
    if x == y:
        raise IdenticalPoints(f"{x} twice")
    cross = (x.conjugate() * y).imag
    if abs(cross) <= DIAMETER_TOL * max(abs(x) * abs(y), 1e-30):
        e = (y - x) / abs(y - x)
        return _diameter(-e, e)
    # invert the point farther from the origin: its inverse is better conditioned
    far = x if abs(x) >= abs(y) else y
    center = plane.circumcenter(x, y, plane.inverse_point(far))
    if center is INF:
        # numerically collinear with the origin after all
        e = (y - x) / abs(y - x)
        return _diameter(-e, e)
    radius = math.sqrt(abs(center) ** 2 - 1.0)
    p1, p2 = circle_meets_unit(center, radius)
    th_x = math.atan2((x - center).imag, (x - center).real)
    th_y = math.atan2((y - center).imag, (y - center).real)
    s = 1.0 if plane.wrap_angle(th_y - th_x) > 0 else -1.0

    def ahead_of_x(p):
        th = math.atan2((p - center).imag, (p - center).real)
        return ((th - th_x) * s) % (2 * math.pi)

    # walking from x towards y, y_* is reached before x_*
    y_star, x_star = sorted((p1, p2), key=ahead_of_x)
    return Geodesic("arc", (x_star, y_star), center=center, radius=radius)


def ideal_geodesic(a: complex, b: complex) -> Geodesic:
    """The hyperbolic line with ideal endpoints ``a`` and ``b``."""
    a, b = complex(a), complex(b)
    plane.check_unimodular(a, b)
    if abs(a - b) <= plane.UNIT_TOL:
        raise IdenticalPoints(f"{a} twice")
    if abs(a + b) <= plane.UNIT_TOL:
        return _diameter(a, b)
    return _orthogonal_arc(2 * a * b / (a + b), a, b)


def _rho_grid(z1: np.ndarray, z2: np.ndarray) -> np.ndarray:
    num = np.abs(z1 - z2)
    den = np.sqrt((1 - np.abs(z1) ** 2) * (1 - np.abs(z2) ** 2))
    return 2.0 * np.arcsinh(num / den)


def _golden_min(f, lo: float, hi: float, iters: int = 60) -> tuple[float, float]:
    g = (math.sqrt(5) - 1) / 2
    c, d = hi - g * (hi - lo), lo + g * (hi - lo)
    fc, fd = f(c), f(d)
    for _ in range(iters):
        if fc <= fd:
            hi, d, fd = d, c, fc
            c = hi - g * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + g * (hi - lo)
            fd = f(d)
    return (c, fc) if fc <= fd else (d, fd)


def geodesic_pair_distance_oracle(g1: Geodesic, g2: Geodesic, grid: int = 512) -> float:
    """Brute-force estimate of ``inf rho(p, q)`` over ``p`` on g1, ``q`` on g2.

    A ``grid x grid`` sweep over both parameters is followed by two rounds of
    coordinate-wise golden-section refinement. Intended as a test oracle.
    """
    if grid < 2:
        raise ValueError("grid must be at least 2")
    t = np.arange(1, grid) / grid
    p1, p2 = g1.points(t), g2.points(t)
    rho = _rho_grid(p1[:, None], p2[None, :])
    i, j = np.unravel_index(np.argmin(rho), rho.shape)
    s1, s2, best = float(t[i]), float(t[j]), float(rho[i, j])
    h = 1.0 / grid

    def rho_at(u: float, v: float) -> float:
        if not (0.0 < u < 1.0 and 0.0 < v < 1.0):
            return math.inf
        return float(_rho_grid(g1.points(u), g2.points(v)))

    for _ in range(2):
        for _ in range(40):
            lo1, hi1 = max(s1 - 2 * h, 1e-15), min(s1 + 2 * h, 1 - 1e-15)
            u, fu = _golden_min(lambda u: rho_at(u, s2), lo1, hi1)
            if fu < best:
                s1, best = u, fu
            lo2, hi2 = max(s2 - 2 * h, 1e-15), min(s2 + 2 * h, 1 - 1e-15)
            v, fv = _golden_min(lambda v: rho_at(s1, v), lo2, hi2)
            if fv < best:
                s2, best = v, fv
        h /= 8
    return best
