import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dronebs.geometry import (
    ConvexPolygon,
    Disk,
    FleetGeometry,
    Vec2,
    overlap_area,
    point_polyline_distance,
)

SQRT3 = math.sqrt(3.0)


def mc_overlap_area(d, rc, n=10_000_000, seed=1234):
    """Monte Carlo integration oracle for the triple-overlap area.

    Rejection counting over a square that provably contains the overlap
    region: every point of the region lies within h - r/2 of the formation
    centroid, where h = sqrt(rc^2 - d^2/4) is the half-chord of a circle
    pair and r = d/sqrt(3) the triangle circumradius (the region's corners
    are the near intersection points of circle pairs, at exactly h - r/2).
    """
    fg = FleetGeometry(Vec2(0.0, 0.0), 0.0, d, rc)
    r = d / SQRT3
    h = math.sqrt(rc * rc - 0.25 * d * d)
    half = min(rc, h - 0.5 * r) + 1e-6
    drones = np.array([[p.x, p.y] for p in fg.drone_positions()])
    rng = np.random.default_rng(seed)
    hits = 0
    left = n
    while left > 0:
        k = min(2_000_000, left)
        pts = rng.uniform(-half, half, size=(k, 2))
        ok = np.ones(k, dtype=bool)
        for cx, cy in drones:
            dx = pts[:, 0] - cx
            dy = pts[:, 1] - cy
            ok &= dx * dx + dy * dy <= rc * rc
        hits += int(ok.sum())
        left -= k
    return (2.0 * half) ** 2 * hits / n


UNIT_SQUARE = ConvexPolygon([Vec2(0, 0), Vec2(1, 0), Vec2(1, 1), Vec2(0, 1)])


class TestOverlapArea:
    def test_coincident_disks_full_area(self):
        assert overlap_area(0.0, 500.0) == pytest.approx(math.pi * 500.0**2, rel=1e-12)

    def test_degenerate_point_overlap(self):
        assert abs(overlap_area(SQRT3 * 500.0, 500.0)) <= 1e-9 * math.pi * 500.0**2

    def test_matches_monte_carlo_at_d50(self):
        mc = mc_overlap_area(50.0, 500.0)
        assert overlap_area(50.0, 500.0) == pytest.approx(mc, rel=5e-3)

    @pytest.mark.parametrize("d", [0.0, 50.0, 250.0, 500.0, 0.99 * SQRT3 * 500.0])
    def test_monte_carlo_agreement_grid(self, d):
        mc = mc_overlap_area(d, 500.0, n=2_000_000, seed=99)
        assert overlap_area(d, 500.0) == pytest.approx(mc, rel=5e-3)

    def test_monotone_nonincreasing_in_d(self):
        rc = 500.0
        ds = np.linspace(0.0, SQRT3 * rc, 100)
        areas = [overlap_area(float(d), rc) for d in ds]
        assert all(a >= b - 1e-9 for a, b in zip(areas, areas[1:]))

    @given(st.floats(min_value=0.01, max_value=100.0), st.floats(min_value=0.0, max_value=1.7))
    @settings(max_examples=200, deadline=None)
    def test_scale_covariance(self, s, frac):
        rc = 500.0
        d = frac * rc  # frac < sqrt(3) keeps the domain valid
        assert overlap_area(s * d, s * rc) == pytest.approx(
            s * s * overlap_area(d, rc), rel=1e-9
        )

    @pytest.mark.parametrize("d,rc", [(-1.0, 500.0), (10.0, 0.0), (10.0, -5.0), (900.0, 500.0)])
    def test_domain_errors(self, d, rc):
        with pytest.raises(ValueError):
            overlap_area(d, rc)


class TestFleetGeometry:
    def test_zero_side_collapses_to_centroid(self):
        fg = FleetGeometry(Vec2(0, 0), 0.0, 0.0, 500.0)
        for p in fg.drone_positions():
            assert p.distance_to(Vec2(0, 0)) == 0.0

    def test_leading_vertex_along_heading(self):
        fg = FleetGeometry(Vec2(0, 0), math.pi / 2, 50.0, 500.0)
        a, b, c = fg.drone_positions()
        assert a.x == pytest.approx(0.0, abs=1e-9)
        assert a.y == pytest.approx(50.0 / SQRT3, rel=1e-12)
        for p, q in [(a, b), (b, c), (a, c)]:
            assert p.distance_to(q) == pytest.approx(50.0, rel=1e-9)

    def test_centroid_preserved(self):
        fg = FleetGeometry(Vec2(100, 100), 0.0, 50.0, 500.0)
        pts = fg.drone_positions()
        cx = sum(p.x for p in pts) / 3.0
        cy = sum(p.y for p in pts) / 3.0
        assert cx == pytest.approx(100.0, abs=1e-9)
        assert cy == pytest.approx(100.0, abs=1e-9)

    def test_footprint_radius_formula(self):
        fg = FleetGeometry(Vec2(0, 0), 0.0, 50.0, 500.0)
        assert fg.guaranteed_footprint().radius == pytest.approx(500.0 - 50.0 / SQRT3, rel=1e-12)
        fg0 = FleetGeometry(Vec2(3, 4), 1.0, 0.0, 500.0)
        assert fg0.guaranteed_footprint().radius == pytest.approx(500.0, rel=1e-12)

    def test_footprint_contained_in_all_coverage_disks(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            centroid = Vec2(*(rng.uniform(-1000, 1000, 2)))
            rc = rng.uniform(100.0, 800.0)
            d = rng.uniform(0.0, 0.99 * SQRT3 * rc)
            fg = FleetGeometry(centroid, rng.uniform(0, 2 * math.pi), d, rc)
            rho = fg.guaranteed_footprint().radius
            drones = fg.drone_positions()
            ang = rng.uniform(0, 2 * math.pi, 500)
            rad = rho * np.sqrt(rng.uniform(0, 1, 500))
            for a, r in zip(ang, rad):
                p = Vec2(centroid.x + r * math.cos(a), centroid.y + r * math.sin(a))
                for dp in drones:
                    assert p.distance_to(dp) <= rc + 1e-9

    def test_rejects_side_beyond_overlap(self):
        with pytest.raises(ValueError):
            FleetGeometry(Vec2(0, 0), 0.0, SQRT3 * 500.0, 500.0)


class TestPolygon:
    def test_unit_square_widths(self):
        assert UNIT_SQUARE.width(0.0) == pytest.approx(1.0)
        assert UNIT_SQUARE.width(math.pi / 4) == pytest.approx(math.sqrt(2))

    def test_rectangle_width(self):
        rect = ConvexPolygon([Vec2(0, 0), Vec2(10000, 0), Vec2(10000, 4000), Vec2(0, 4000)])
        assert rect.width(0.0) == pytest.approx(10000.0)

    @given(st.floats(min_value=0.0, max_value=math.pi))
    @settings(max_examples=100, deadline=None)
    def test_width_period_pi(self, theta):
        assert UNIT_SQUARE.width(theta) == pytest.approx(UNIT_SQUARE.width(theta + math.pi), abs=1e-9)

    def test_containment(self):
        assert UNIT_SQUARE.contains(Vec2(0.5, 0.5))
        assert UNIT_SQUARE.contains(Vec2(1.0, 0.5))  # boundary is inside
        assert not UNIT_SQUARE.contains(Vec2(1.001, 0.5))

    def test_area_shoelace(self):
        tri = ConvexPolygon([Vec2(0, 0), Vec2(4, 0), Vec2(0, 3)])
        assert tri.area == pytest.approx(6.0)

    def test_cw_input_normalized(self):
        cw = ConvexPolygon([Vec2(0, 1), Vec2(1, 1), Vec2(1, 0), Vec2(0, 0)])
        assert cw.area == pytest.approx(1.0)

    def test_collinear_vertices_dropped(self):
        poly = ConvexPolygon([Vec2(0, 0), Vec2(0.5, 0), Vec2(1, 0), Vec2(1, 1), Vec2(0, 1)])
        assert len(poly.vertices) == 4

    def test_degenerate_rejected(self):
        with pytest.raises(ValueError):
            ConvexPolygon([Vec2(0, 0), Vec2(1, 0), Vec2(2, 0)])
        with pytest.raises(ValueError):
            ConvexPolygon([Vec2(0, 0), Vec2(1, 0)])

    def test_nonconvex_rejected(self):
        with pytest.raises(ValueError):
            ConvexPolygon([Vec2(0, 0), Vec2(2, 0), Vec2(2, 2), Vec2(1, 0.5), Vec2(0, 2)])

    def test_clip_halfplane(self):
        left = UNIT_SQUARE.clip_halfplane(Vec2(1, 0), 0.5)
        assert left is not None
        assert left.area == pytest.approx(0.5)
        nothing = UNIT_SQUARE.clip_halfplane(Vec2(1, 0), -0.5)
        assert nothing is None


class TestDisk:
    def test_closed_containment(self):
        d = Disk(Vec2(0, 0), 1.0)
        assert d.contains(Vec2(0, 1.0))
        assert not d.contains(Vec2(0, 1.0000001))

    def test_negative_radius_rejected(self):
        with pytest.raises(ValueError):
            Disk(Vec2(0, 0), -0.1)


def test_point_polyline_distance():
    line = [Vec2(0, 0), Vec2(10, 0), Vec2(10, 10)]
    assert point_polyline_distance(Vec2(5, 3), line) == pytest.approx(3.0)
    assert point_polyline_distance(Vec2(12, 12), line) == pytest.approx(math.hypot(2, 2))
