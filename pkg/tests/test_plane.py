import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclicquad import plane
from cyclicquad.errors import CoincidentLines, CollinearInput, DegenerateInput, NotUnimodular
from cyclicquad.hyperbolic import MobiusMap
from cyclicquad.plane import INF

from conftest import disk_points


def solve_2x2(a, b, c, d):
    """Independent line intersection: a + s(b - a) = c + t(d - c)."""
    m = np.array([[(b - a).real, -(d - c).real], [(b - a).imag, -(d - c).imag]])
    s, _ = np.linalg.solve(m, [(c - a).real, (c - a).imag])
    return a + s * (b - a)


def altitude_oracle(a, b, c):
    """Intersection of the altitudes from a and from b."""
    return solve_2x2(a, a + 1j * (c - b), b, b + 1j * (c - a))


class TestLineIntersection:
    def test_axes(self):
        assert abs(plane.line_intersection(-1, 1, -1j, 1j)) < 1e-15

    def test_shared_endpoint(self):
        assert abs(plane.line_intersection(1, 1j, 1, -1j) - 1) < 1e-15

    def test_parallel_chords_of_square(self):
        assert plane.line_intersection(1, 1j, -1, -1j) is INF
        with pytest.raises(np.linalg.LinAlgError):
            solve_2x2(1 + 0j, 1j, -1 + 0j, -1j)

    def test_coincident(self):
        with pytest.raises(CoincidentLines):
            plane.line_intersection(0, 1, 2, 3)

    def test_repeated_point(self):
        with pytest.raises(DegenerateInput):
            plane.line_intersection(1, 1, 0, 1j)

    @settings(max_examples=200)
    @given(st.lists(disk_points(), min_size=4, max_size=4))
    def test_matches_linear_solve_and_lies_on_both_lines(self, pts):
        a, b, c, d = pts
        if min(abs(a - b), abs(c - d)) < 1e-3:
            return
        sin_angle = abs(((b - a).conjugate() * (d - c)).imag) / (abs(b - a) * abs(d - c))
        if sin_angle < 1e-3:
            return
        w = plane.line_intersection(a, b, c, d)
        ref = solve_2x2(a, b, c, d)
        scale = max(1.0, abs(ref))
        assert abs(w - ref) < 1e-9 * scale / sin_angle
        assert plane.distance_to_line(w, a, b - a) < 1e-10 * scale / sin_angle
        assert plane.distance_to_line(w, c, d - c) < 1e-10 * scale / sin_angle


class TestUnitLineIntersection:
    def test_diameters(self):
        assert abs(plane.unit_line_intersection(1, -1, 1j, -1j)) < 1e-15

    def test_parallel(self):
        assert plane.unit_line_intersection(1, 1j, -1, -1j) is INF

    def test_matches_general_formula(self):
        pts = [cmath.exp(1j * t) for t in (0, math.pi / 2, math.pi, 5 * math.pi / 4)]
        w = plane.unit_line_intersection(*pts)
        assert abs(w - plane.line_intersection(*pts)) < 1e-12
        assert abs(w - solve_2x2(*pts)) < 1e-12

    def test_rejects_off_circle(self):
        with pytest.raises(NotUnimodular):
            plane.unit_line_intersection(1, 1j, -1, 0.5)

    def test_random_agreement(self):
        rng = np.random.default_rng(7)
        for _ in range(2000):
            a, b, c, d = np.exp(1j * rng.uniform(0, 2 * np.pi, 4))
            sin_angle = abs(((b - a).conjugate() * (d - c)).imag) / (abs(b - a) * abs(d - c))
            if sin_angle < 0.05 or min(abs(a - b), abs(c - d)) < 0.05:
                continue
            w = plane.unit_line_intersection(a, b, c, d)
            assert abs(w - plane.line_intersection(a, b, c, d)) < 1e-10 * max(1.0, abs(w))


class TestTriangleCenters:
    def test_circumcenter_examples(self):
        assert abs(plane.circumcenter(0, 1, 1j) - (1 + 1j) / 2) < 1e-15
        assert abs(plane.circumcenter(1, 1j, -1)) < 1e-15
        assert plane.circumcenter(0, 1, 2) is INF

    def test_circumcenter_repeated(self):
        with pytest.raises(DegenerateInput):
            plane.circumcenter(0, 0, 1)

    def test_orthocenter_right_angle(self):
        assert abs(plane.orthocenter(0, 1, 1j)) < 1e-15

    def test_orthocenter_equilateral_is_centroid(self):
        tri = (0, 2, 1 + 1j * math.sqrt(3))
        o = plane.orthocenter(*tri)
        assert abs(o - (1 + 1j / math.sqrt(3))) < 1e-14
        assert abs(o - altitude_oracle(*map(complex, tri))) < 1e-14

    def test_orthocenter_collinear(self):
        with pytest.raises(CollinearInput):
            plane.orthocenter(0, 1, 2)

    @settings(max_examples=300)
    @given(st.lists(disk_points(0.99), min_size=3, max_size=3))
    def test_euler_and_altitudes(self, tri):
        a, b, c = tri
        m = plane.circumcenter(a, b, c) if len({a, b, c}) == 3 else INF
        if m is INF or abs(((b - a).conjugate() * (c - a)).imag) < 1e-3:
            return
        o = plane.orthocenter(a, b, c)
        assert abs(o - (a + b + c - 2 * m)) < 1e-12 * max(1.0, abs(m))
        assert abs(o - altitude_oracle(a, b, c)) < 1e-9 * max(1.0, abs(o))
        for v, p, q in ((a, b, c), (b, c, a), (c, a, b)):
            if abs(o - v) > 1e-9:
                cos = ((o - v) * (q - p).conjugate()).real / (abs(o - v) * abs(q - p))
                assert abs(cos) < 1e-8

    def test_circle_through(self):
        circ = plane.circle_through(1, 1j, -1)
        assert abs(circ.center) < 1e-15 and abs(circ.radius - 1) < 1e-15
        circ = plane.circle_through(0, 1, 1j)
        assert abs(circ.radius - 1 / math.sqrt(2)) < 1e-15
        rng = np.random.default_rng(3)
        for _ in range(200):
            pts = rng.normal(size=3) + 1j * rng.normal(size=3)
            circ = plane.circle_through(*pts)
            assert max(abs(circ.residual(z)) for z in pts) < 1e-10 * max(1.0, circ.radius)
        with pytest.raises(CollinearInput):
            plane.circle_through(0, 1, 2)


class TestCrossRatio:
    def test_square(self):
        assert abs(plane.cross_ratio(1, 1j, -1, -1j) - 2) < 1e-15

    def test_infinity_convention(self):
        assert abs(plane.cross_ratio(0, 1, 3.5, INF) - 3.5) < 1e-15

    def test_repeated(self):
        with pytest.raises(DegenerateInput):
            plane.cross_ratio(1, 1, 2, 3)

    @settings(max_examples=200)
    @given(
        st.lists(disk_points(), min_size=4, max_size=4),
        st.lists(st.complex_numbers(max_magnitude=2.0, allow_nan=False), min_size=4, max_size=4),
    )
    def test_mobius_invariance(self, pts, coeffs):
        alpha, beta, gamma, delta = coeffs
        if abs(alpha * delta - beta * gamma) < 0.1:
            return
        if min(abs(pts[i] - pts[j]) for i in range(4) for j in range(i + 1, 4)) < 1e-2:
            return
        m = MobiusMap(alpha, beta, gamma, delta)
        if any(abs(gamma * z + delta) < 0.1 for z in pts):
            return
        imgs = [m(z) for z in pts]
        before, after = plane.cross_ratio(*pts), plane.cross_ratio(*imgs)
        assert abs(before - after) < 1e-9 * max(1.0, before)


class TestInversion:
    def test_examples(self):
        assert plane.inverse_point(0.5) == 2
        u = cmath.exp(0.7j)
        assert abs(plane.inverse_point(u) - u) < 1e-15
        assert plane.inverse_point(0) is INF
        assert plane.inverse_point(INF) == 0

    @given(st.complex_numbers(min_magnitude=1e-3, max_magnitude=1e3, allow_nan=False, allow_infinity=False))
    def test_involution(self, x):
        assert abs(plane.inverse_point(plane.inverse_point(x)) - x) < 1e-12 * max(1.0, abs(x))


class TestCollinear:
    def test_examples(self):
        assert plane.are_collinear([0, 1, 2], tol=1e-12)
        assert not plane.are_collinear([0, 1, 1 + 1j], tol=1e-12)

    def test_order_and_scale_invariant(self):
        pts = [0.3 + 0.1j, 1.3 + 0.6j, -2.7 - 1.4j, 0.3 + 0.1000001j]
        for k in (1e-3, 1.0, 1e4):
            scaled = [k * z for z in pts]
            assert plane.are_collinear(scaled, 1e-6) == plane.are_collinear(scaled[::-1], 1e-6)
        assert all(plane.are_collinear([k * z for z in pts[:3]], 1e-12) for k in (1e-3, 1.0, 1e4))

    def test_needs_three(self):
        with pytest.raises(DegenerateInput):
            plane.are_collinear([0, 1])


class TestCircleIntersections:
    def test_radical_line(self):
        c1, c2 = plane.Circle(0j, 1.0), plane.Circle(1 + 0j, 1.0)
        p, q = plane.circle_intersections(c1, c2)
        for z in (p, q):
            assert abs(c1.residual(z)) < 1e-15 and abs(c2.residual(z)) < 1e-15
        assert abs(p.real - 0.5) < 1e-15

    def test_disjoint(self):
        with pytest.raises(DegenerateInput):
            plane.circle_intersections(plane.Circle(0j, 1.0), plane.Circle(5 + 0j, 1.0))
