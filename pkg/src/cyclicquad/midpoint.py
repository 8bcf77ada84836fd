"""Closed-form hyperbolic midpoint and the gyrovector operations behind it."""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import plane
from .errors import DegenerateConfiguration
from .hyperbolic import Geodesic, check_disk, geodesic_through
from .plane import ExtendedPoint


def _one_minus_sq(x: complex) -> float:
    r = abs(x)
    return (1.0 - r) * (1.0 + r)


def hyperbolic_midpoint(x: complex, y: complex) -> complex:
    """Point ``z`` on the geodesic segment ``[x, y]`` with equal distances to both ends."""
    x, y = complex(x), complex(y)
    check_disk(x, y)
    if x == y:
        return x
    sx, sy = _one_minus_sq(x), _one_minus_sq(y)
    bracket = math.sqrt(sx * sy + abs(x - y) ** 2)
    num = y * sx + x * sy
    den = 1.0 - abs(x) ** 2 * abs(y) ** 2 + bracket * math.sqrt(sx * sy)
    return num / den


def coaddition(x: complex, y: complex) -> complex:
    """Mobius coaddition ``x [+] y``; symmetric in its arguments."""
    x, y = complex(x), complex(y)
    check_disk(x, y)
    sx, sy = _one_minus_sq(x), _one_minus_sq(y)
    return (y * sx + x * sy) / (1.0 - abs(x) ** 2 * abs(y) ** 2)


def point_u(x: complex, y: complex) -> complex:
    """The point ``u`` whose hyperbolic midpoint with 0 is the midpoint of ``x, y``.

    Geometrically ``u = LIS[x, y*, y, x*]``; it is the coaddition of ``x``
    and ``y``.
    """
    return coaddition(x, y)


def mobius_add(x: complex, y: complex) -> complex:
    x, y = complex(x), complex(y)
    check_disk(x, y)
    return (x + y) / (1.0 + x.conjugate() * y)


def gyro_half(x: complex) -> complex:
    """Scalar gyromultiplication by one half: ``h [+] h = x`` with Mobius addition."""
    x = complex(x)
    check_disk(x)
    return x / (1.0 + math.sqrt(_one_minus_sq(x)))


def gyromidpoint(x: complex, y: complex) -> complex:
    return gyro_half(coaddition(x, y))


@dataclass(frozen=True)
class FivePoints:
    k: ExtendedPoint
    v: ExtendedPoint
    s: ExtendedPoint
    u: ExtendedPoint
    t: ExtendedPoint

    def as_dict(self) -> dict[str, ExtendedPoint]:
        return {"k": self.k, "v": self.v, "s": self.s, "u": self.u, "t": self.t}


def five_points(x: complex, y: complex) -> FivePoints:
    """Five line intersections built from ``x, y``, their inverses and ideal endpoints.

    All finite ones lie on the line through 0 and the midpoint of ``x, y``.
    """
    x, y = complex(x), complex(y)
    check_disk(x, y)
    g = geodesic_through(x, y)
    if g.is_diameter:
        raise DegenerateConfiguration("0, x, y are collinear")
    _assert_traversal_order(g, x, y)
    xs, ys = g.endpoints
    xi, yi = plane.inverse_point(x), plane.inverse_point(y)
    lis = plane.line_intersection
    return FivePoints(
        k=lis(xs, xi, ys, yi),
        v=lis(x, xs, y, ys),
        s=lis(x, ys, y, xs),
        u=lis(x, yi, y, xi),
        t=lis(xs, yi, ys, xi),
    )


def _assert_traversal_order(g: Geodesic, x: complex, y: complex) -> None:
    # x_*, x, y, y_* must appear in this order along the carrier
    c = g.center
    ang = [math.atan2((p - c).imag, (p - c).real) for p in (g.endpoints[0], x, y, g.endpoints[1])]
    steps = [plane.wrap_angle(ang[i + 1] - ang[i]) for i in range(3)]
    if not (all(s > 0 for s in steps) or all(s < 0 for s in steps)):
        raise DegenerateConfiguration("ideal endpoints are not in traversal order")
