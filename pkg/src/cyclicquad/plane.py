"""Complex-plane algebra: line intersections, triangle centers, cross ratio.

Points are Python ``complex`` values. The extended plane adds the single
marker :data:`INF`; only the functions in this module that document it accept
or return it, and no arithmetic is defined on it.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import CoincidentLines, CollinearInput, DegenerateInput, NotUnimodular

UNIT_TOL = 1e-9
PARALLEL_TOL = 1e-12


class _Infinity:
    """The point at infinity of the extended complex plane."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()

ExtendedPoint = Union[complex, _Infinity]


def is_inf(z) -> bool:
    return z is INF


def as_point(z) -> ExtendedPoint:
    """Coerce numbers to ``complex``; pass :data:`INF` through; reject NaN."""
    if z is INF:
        return INF
    w = complex(z)
    if not (math.isfinite(w.real) and math.isfinite(w.imag)):
        raise DegenerateInput(f"non-finite coordinate {z!r}")
    return w


@dataclass(frozen=True)
class Circle:
    center: complex
    radius: float

    def __post_init__(self):
        if not self.radius > 0:
            raise DegenerateInput(f"circle radius must be positive, got {self.radius}")

    def residual(self, z: complex) -> float:
        """Signed distance of ``z`` from the circle (positive outside)."""
        return abs(z - self.center) - self.radius

    def invert(self, z: ExtendedPoint) -> ExtendedPoint:
        """Inversion in this circle; the center and INF are swapped."""
        if z is INF:
            return self.center
        dz = z - self.center
        if dz == 0:
            return INF
        return self.center + self.radius**2 / dz.conjugate()


def check_unimodular(*points: complex, tol: float = UNIT_TOL) -> None:
    for z in points:
        if z is INF or abs(abs(z) - 1.0) > tol:
            raise NotUnimodular(f"|{z!r}| deviates from 1 by more than {tol:g}")


def line_intersection(a: complex, b: complex, c: complex, d: complex) -> ExtendedPoint:
    """Intersection of the line through ``a, b`` with the line through ``c, d``.

    Returns :data:`INF` for distinct parallel lines and raises
    :class:`CoincidentLines` when the two lines are the same.
    """
    a, b, c, d = (complex(z) for z in (a, b, c, d))
    if a == b or c == d:
        raise DegenerateInput("a line needs two distinct points")
    ab, cd = a - b, c - d
    u = (a.conjugate() * b - a * b.conjugate()) * cd - ab * (c.conjugate() * d - c * d.conjugate())
    v = ab.conjugate() * cd - ab * cd.conjugate()
    scale = abs(ab) * abs(cd)
    if abs(v) <= PARALLEL_TOL * scale:
        if abs(u) <= PARALLEL_TOL * scale * max(1.0, abs(a), abs(b), abs(c), abs(d)):
            raise CoincidentLines(f"L[{a}, {b}] and L[{c}, {d}] coincide")
        return INF
    return u / v


_TWO_PI_HI = 2 * math.pi
_TWO_PI_LO = 2.4492935982947064e-16  # 2*pi - _TWO_PI_HI


def _reduced_angle_sum(terms: Sequence[float]) -> tuple[float, int]:
    """``sum(terms) - 2 pi k`` in ``[-pi, pi]`` and ``k``, keeping small results exact."""
    s = math.fsum(terms)
    k = round(s / _TWO_PI_HI)
    return math.fsum([*terms, -k * _TWO_PI_HI, -k * _TWO_PI_LO]), k


def chord_intersection(alpha: float, beta: float, gamma: float, delta: float) -> ExtendedPoint:
    """Meeting point of the chords ``[e^{i alpha}, e^{i beta}]`` and ``[e^{i gamma}, e^{i delta}]``.

    This is ``(ab(c+d) - cd(a+b)) / (ab - cd)`` rewritten in half angles, so
    the small denominator of nearly parallel chords comes from an exactly
    summed angle instead of a difference of rounded products.
    """
    diff, k = _reduced_angle_sum([alpha, beta, -gamma, -delta])
    den = 1j * math.sin(diff / 2) * (-1.0 if k % 2 else 1.0)
    num = (
        cmath.exp(0.5j * math.fsum([alpha, beta])) * math.cos(math.fsum([gamma, -delta]) / 2)
        - cmath.exp(0.5j * math.fsum([gamma, delta])) * math.cos(math.fsum([alpha, -beta]) / 2)
    )
    if abs(den) <= PARALLEL_TOL:
        if abs(num) <= PARALLEL_TOL:
            raise CoincidentLines("chords coincide")
        return INF
    return num / den


def unit_line_intersection(a: complex, b: complex, c: complex, d: complex) -> ExtendedPoint:
    """Line intersection specialised to four points on the unit circle."""
    check_unimodular(a, b, c, d)
    a, b, c, d = (complex(z) for z in (a, b, c, d))
    if abs(a - b) <= UNIT_TOL or abs(c - d) <= UNIT_TOL:
        raise DegenerateInput("a chord needs two distinct endpoints")
    return chord_intersection(*(cmath.phase(z) for z in (a, b, c, d)))


def _require_distinct(*points: complex) -> None:
    for i, p in enumerate(points):
        for q in points[i + 1:]:
            if p == q:
                raise DegenerateInput(f"repeated point {p!r}")


def circumcenter(a: complex, b: complex, c: complex) -> ExtendedPoint:
    """Center of the circle through ``a, b, c``; INF when they are collinear."""
    a, b, c = complex(a), complex(b), complex(c)
    _require_distinct(a, b, c)
    num = abs(a) ** 2 * (b - c) + abs(b) ** 2 * (c - a) + abs(c) ** 2 * (a - b)
    den = (
        a * (c.conjugate() - b.conjugate())
        + b * (a.conjugate() - c.conjugate())
        + c * (b.conjugate() - a.conjugate())
    )
    scale = max(abs(a - b), abs(b - c), abs(c - a)) ** 2
    if abs(den) <= PARALLEL_TOL * scale:
        return INF
    return num / den


def orthocenter(a: complex, b: complex, c: complex) -> complex:
    """Orthocenter of the triangle ``a, b, c`` by Euler's closed form."""
    a, b, c = complex(a), complex(b), complex(c)
    if circumcenter(a, b, c) is INF:
        raise CollinearInput(f"{a}, {b}, {c} are collinear")
    ac, bc, cc = a.conjugate(), b.conjugate(), c.conjugate()
    num = ac * (b + c - a) * (b - c) + bc * (c + a - b) * (c - a) + cc * (a + b - c) * (a - b)
    den = ac * (b - c) + bc * (c - a) + cc * (a - b)
    return num / den


def cross_ratio(a: ExtendedPoint, b: ExtendedPoint, c: ExtendedPoint, d: ExtendedPoint) -> float:
    """Absolute cross ratio ``|a-c||b-d| / (|a-b||c-d|)``.

    One argument may be :data:`INF`; the two factors containing it cancel.
    """
    pts = [as_point(z) for z in (a, b, c, d)]
    n_inf = sum(p is INF for p in pts)
    if n_inf > 1:
        raise DegenerateInput("at most one point may be at infinity")
    _require_distinct(*[p for p in pts if p is not INF])
    a, b, c, d = pts

    def dist(p, q):
        return 1.0 if (p is INF or q is INF) else abs(p - q)

    return dist(a, c) * dist(b, d) / (dist(a, b) * dist(c, d))


def inverse_point(x: ExtendedPoint) -> ExtendedPoint:
    """Inversion in the unit circle, ``x* = 1 / conj(x)``."""
    if x is INF:
        return 0j
    x = complex(x)
    if x == 0:
        return INF
    r = abs(x)
    if r < 1e-300:
        # 1 / conj(x) would overflow
        return INF
    return (x / r) / r


def are_collinear(points: Sequence[complex], tol: float = 1e-8) -> bool:
    """Whether ``points`` lie on one line, up to ``tol`` times their diameter.

    The line is the total-least-squares fit, so the test does not depend on
    the order of the points.
    """
    if len(points) < 3:
        raise DegenerateInput("collinearity needs at least three points")
    z = np.asarray([complex(p) for p in points], dtype=complex)
    diam = float(np.max(np.abs(z[:, None] - z[None, :])))
    if diam == 0.0:
        return True
    xy = np.column_stack([z.real, z.imag]) / diam
    xy -= xy.mean(axis=0)
    _, _, vt = np.linalg.svd(xy, full_matrices=False)
    normal = vt[-1]
    return bool(np.max(np.abs(xy @ normal)) <= tol)


def circle_through(a: complex, b: complex, c: complex) -> Circle:
    m = circumcenter(a, b, c)
    if m is INF:
        raise CollinearInput(f"{a}, {b}, {c} are collinear")
    return Circle(m, abs(complex(a) - m))


def circle_intersections(c1: Circle, c2: Circle) -> tuple[complex, complex]:
    """The two intersection points of two circles (equal when tangent).

    Uses the radical line; raises :class:`DegenerateInput` if the circles are
    concentric or do not meet.
    """
    delta = c2.center - c1.center
    dist = abs(delta)
    if dist == 0:
        raise DegenerateInput("concentric circles")
    along = (dist**2 + c1.radius**2 - c2.radius**2) / (2 * dist)
    h2 = c1.radius**2 - along**2
    if h2 < -1e-12 * max(c1.radius, c2.radius) ** 2:
        raise DegenerateInput("circles do not intersect")
    h = math.sqrt(max(h2, 0.0))
    e = delta / dist
    foot = c1.center + along * e
    return foot - 1j * h * e, foot + 1j * h * e


def reflect_in_line(z: complex, p: complex, q: complex) -> complex:
    """Mirror image of ``z`` in the line through ``p`` and ``q``."""
    e = (q - p) / abs(q - p)
    return p + e * e * (z - p).conjugate()


def distance_to_line(z: complex, p: complex, direction: complex) -> float:
    e = direction / abs(direction)
    return abs(((z - p) * e.conjugate()).imag)


def unit_from_angle(theta: float) -> complex:
    return cmath.exp(1j * theta)


def wrap_angle(theta: float, period: float = 2 * math.pi) -> float:
    """Reduce ``theta`` into ``(-period/2, period/2]``."""
    r = math.remainder(theta, period)
    return period / 2 if r == -period / 2 else r


def iter_finite(points: Iterable[ExtendedPoint]) -> list[complex]:
    return [p for p in points if p is not INF]
