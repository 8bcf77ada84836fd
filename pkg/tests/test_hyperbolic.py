import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings

from cyclicquad import hyperbolic as hb
from cyclicquad import plane
from cyclicquad.errors import DegenerateMap, IdenticalPoints, NotUnimodular, OutOfDisk
from cyclicquad.plane import INF

from conftest import disk_points, random_disk

SQUARE_GAP = 2 * math.log(1 + math.sqrt(2))


class TestDistance:
    def test_examples(self):
        assert hb.hyperbolic_distance(0.3j, 0.3j) == 0
        assert abs(hb.hyperbolic_distance(0, 0.8) - 2 * math.log(3)) < 1e-15

    def test_out_of_disk(self):
        with pytest.raises(OutOfDisk):
            hb.hyperbolic_distance(0, 1.0)

    @settings(max_examples=300)
    @given(disk_points(), disk_points(), disk_points(0.9))
    def test_mobius_invariance(self, x, y, a):
        t = hb.t_a_map(a)
        assert abs(hb.hyperbolic_distance(x, y) - hb.hyperbolic_distance(t(x), t(y))) < 1e-10

    @settings(max_examples=300)
    @given(disk_points(), disk_points(), disk_points())
    def test_triangle_inequality(self, x, y, z):
        rho = hb.hyperbolic_distance
        assert rho(x, z) <= rho(x, y) + rho(y, z) + 1e-12

    @settings(max_examples=300)
    @given(disk_points(), disk_points())
    def test_cosh_form(self, x, y):
        rho = hb.hyperbolic_distance(x, y)
        # acosh near 1 turns a rounding error e of the cross ratio into about e / rho
        if rho < 1e-4:
            return
        assert abs(hb.distance_cosh_form(x, y) - rho) < 1e-10

    def test_cosh_form_examples(self):
        assert hb.distance_cosh_form(0.5, 0.5) == 0
        assert abs(hb.distance_cosh_form(0.3, 0.6j) - hb.hyperbolic_distance(0.3, 0.6j)) < 1e-12
        assert abs(hb.distance_cosh_form(0.1, 0.2) - hb.hyperbolic_distance(0.1, 0.2)) < 1e-12
        # an origin argument goes through the infinity convention of the cross ratio
        assert abs(hb.distance_cosh_form(0, 0.8) - 2 * math.log(3)) < 1e-12


def test_ahlfors_bracket():
    assert abs(hb.ahlfors_bracket(0, 0.6 - 0.3j) - 1) < 1e-15
    x = 0.2 + 0.5j
    assert abs(hb.ahlfors_bracket(x, x) - (1 - abs(x) ** 2)) < 1e-15
    assert abs(hb.ahlfors_bracket(0.3, -0.4) - math.sqrt(0.91 * 0.84 + 0.49)) < 1e-15


class TestMobius:
    def test_t_a(self):
        a = 0.3 - 0.4j
        t = hb.t_a_map(a)
        assert abs(t(a)) < 1e-16
        assert abs(t(0) + a) < 1e-16
        for th in np.linspace(0, 2 * np.pi, 37):
            assert abs(abs(t(cmath.exp(1j * th))) - 1) < 1e-14

    def test_lipschitz_t_a(self):
        assert hb.lipschitz_t_a(0) == 1
        assert abs(hb.lipschitz_t_a(0.5) - 3) < 1e-15

    def test_lipschitz_sampling(self):
        a = 0.5 * cmath.exp(0.8j)
        t = hb.t_a_map(a)
        bound = hb.lipschitz_t_a(a)
        rng = np.random.default_rng(11)
        x, y = random_disk(rng, 5000, 1.0), random_disk(rng, 5000, 1.0)
        ratios = [abs(t(p) - t(q)) / abs(p - q) for p, q in zip(x, y)]
        assert max(ratios) <= bound
        # the constant is attained at a/|a|, where |T_a'| = (1 + |a|) / (1 - |a|)
        e = a / abs(a)
        near = [e * cmath.exp(1j * s) * (1 - 1e-7) for s in (0.0, 1e-4, -1e-4)]
        ratio = abs(t(near[1]) - t(near[2])) / abs(near[1] - near[2])
        assert 0.99 * bound <= ratio <= bound

    def test_apply_identity_and_pole(self):
        m = hb.MobiusMap(1, 2, 3, 4)
        assert hb.MobiusMap.identity()(0.3 + 0.4j) == 0.3 + 0.4j
        assert m(-4 / 3) is INF
        assert m(INF) == 1 / 3

    def test_degenerate(self):
        with pytest.raises(DegenerateMap):
            hb.MobiusMap(1, 2, 2, 4)

    def test_compose_and_inverse(self):
        rng = np.random.default_rng(5)
        for _ in range(100):
            c1 = rng.normal(size=4) + 1j * rng.normal(size=4)
            c2 = rng.normal(size=4) + 1j * rng.normal(size=4)
            m1, m2 = hb.MobiusMap(*c1), hb.MobiusMap(*c2)
            z = complex(rng.normal(), rng.normal())
            inner = m2(z)
            if inner is INF or abs(m1.gamma * inner + m1.delta) < 1e-3:
                continue
            lhs, rhs = (m1 @ m2)(z), m1(inner)
            assert abs(lhs - rhs) < 1e-10 * max(1.0, abs(rhs))
            back = hb.mobius_inverse(m1)(m1(z))
            assert abs(back - z) < 1e-9 * max(1.0, abs(z))


class TestGeodesics:
    def test_diameter(self):
        g = hb.geodesic_through(0.2, 0.7)
        assert g.is_diameter
        assert g.endpoints == (-1, 1)

    def test_diameter_through_origin(self):
        assert hb.geodesic_through(0, 0.3 + 0.3j).is_diameter

    def test_arc_passes_through_inverse(self):
        g = hb.geodesic_through(0.5, 0.5j)
        assert not g.is_diameter
        assert abs(abs(g.center) ** 2 - 1 - g.radius**2) < 1e-10
        assert g.residual(2) < 1e-12

    def test_identical(self):
        with pytest.raises(IdenticalPoints):
            hb.geodesic_through(0.1, 0.1)

    @settings(max_examples=300)
    @given(disk_points(), disk_points())
    def test_endpoints_order_and_symmetry(self, x, y):
        if abs(x - y) < 1e-6:
            return
        g = hb.geodesic_through(x, y)
        # residuals are absolute, so nearly straight arcs get their radius as scale
        tol = 1e-10 * (1.0 if g.is_diameter else max(1.0, g.radius))
        for e in g.endpoints:
            assert abs(abs(e) - 1) < 1e-10
            assert g.residual(e) < tol
        assert g.residual(x) < tol and g.residual(y) < tol
        # x_*, x, y, y_* in order: distances from x_* increase
        xs, ys = g.endpoints
        assert abs(xs - x) < abs(xs - y) + 1e-12 and abs(ys - y) < abs(ys - x) + 1e-12
        h = hb.geodesic_through(y, x)
        assert h.kind == g.kind
        assert abs(h.endpoints[0] - ys) < 1e-10 and abs(h.endpoints[1] - xs) < 1e-10
        if not g.is_diameter:
            assert abs(h.center - g.center) < 1e-10 * abs(g.center)

    def test_ideal_geodesic(self):
        assert hb.ideal_geodesic(1, -1).is_diameter
        g = hb.ideal_geodesic(1, 1j)
        assert abs(g.center - (1 + 1j)) < 1e-15 and abs(g.radius - 1) < 1e-15
        with pytest.raises(NotUnimodular):
            hb.ideal_geodesic(1, 0.5)
        with pytest.raises(IdenticalPoints):
            hb.ideal_geodesic(1j, 1j)
        rng = np.random.default_rng(2)
        for a, b in np.exp(1j * rng.uniform(0, 2 * np.pi, (300, 2))):
            g = hb.ideal_geodesic(a, b)
            if g.is_diameter:
                continue
            assert g.residual(a) < 1e-10 and g.residual(b) < 1e-10
            assert abs(abs(g.center) ** 2 - g.radius**2 - 1) < 1e-10 * abs(g.center) ** 2


class TestOracle:
    def test_crossing_diameters(self):
        g1, g2 = hb.ideal_geodesic(1, -1), hb.ideal_geodesic(1j, -1j)
        assert hb.geodesic_pair_distance_oracle(g1, g2, 64) < 1e-12

    def test_square(self):
        a, b, c, d = 1, 1j, -1, -1j
        g1, g2 = hb.ideal_geodesic(a, d), hb.ideal_geodesic(b, c)
        assert abs(hb.geodesic_pair_distance_oracle(g1, g2, 512) - SQUARE_GAP) < 1e-5

    def test_monotone_in_grid(self):
        a, b, c, d = (cmath.exp(1j * math.radians(t)) for t in (5, 70, 150, 300))
        g1, g2 = hb.ideal_geodesic(a, d), hb.ideal_geodesic(b, c)
        fine = hb.geodesic_pair_distance_oracle(g1, g2, 1024)
        coarse = hb.geodesic_pair_distance_oracle(g1, g2, 128)
        assert fine <= coarse + 1e-12
