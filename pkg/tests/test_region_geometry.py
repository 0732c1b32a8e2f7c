import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from macregion.region_geometry import (
    RatePentagon,
    RegionPolygon,
    contains,
    convex_hull_2d,
    hausdorff,
    is_subset,
    max_r2_at,
    pentagon_vertices,
    polygon_area,
    union_region,
)

caps = st.floats(min_value=0.0, max_value=3.0, allow_nan=False)
pos_caps = st.floats(min_value=0.05, max_value=3.0, allow_nan=False)


class TestRatePentagon:
    def test_clamps_negative(self):
        p = RatePentagon(-0.5, 1.0, -1e-9)
        assert p.c1 == 0.0 and p.c12 == 0.0

    def test_rejects_nan(self):
        with pytest.raises(ValueError):
            RatePentagon(float("nan"), 1.0, 1.0)

    def test_effective_caps(self):
        p = RatePentagon(1.0, 1.0, 0.6)
        assert p.c1_eff == 0.6 and p.c2_eff == 0.6


class TestPentagonVertices:
    def test_textbook_pentagon(self):
        poly = pentagon_vertices(RatePentagon(1.0, 1.0, 1.5))
        assert poly.vertices == ((0.0, 0.0), (1.0, 0.0), (1.0, 0.5), (0.5, 1.0), (0.0, 1.0))

    def test_slack_sum_is_rectangle(self):
        poly = pentagon_vertices(RatePentagon(1.0, 1.0, 2.5))
        assert poly.vertices == ((0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0))

    def test_sum_cap_below_c2(self):
        c1, c2, c12 = 0.4689955935892812, 0.9709505944546686, 0.6355910332847168
        poly = pentagon_vertices(RatePentagon(c1, c2, c12))
        assert poly.vertices == ((0.0, 0.0), (c1, 0.0), (c1, c12 - c1), (0.0, c12))

    def test_zero_caps(self):
        assert pentagon_vertices(RatePentagon(0.0, 0.0, 0.0)).vertices == ((0.0, 0.0),)
        assert pentagon_vertices(RatePentagon(0.0, 0.7, 1.0)).vertices == (
            (0.0, 0.0),
            (0.0, 0.7),
        )
        assert pentagon_vertices(RatePentagon(0.7, 0.0, 1.0)).vertices == (
            (0.0, 0.0),
            (0.7, 0.0),
        )
        # zero sum cap collapses everything
        assert pentagon_vertices(RatePentagon(0.7, 0.7, 0.0)).vertices == ((0.0, 0.0),)

    @settings(max_examples=150)
    @given(pos_caps, pos_caps, pos_caps)
    def test_vertices_satisfy_caps_with_equality(self, c1, c2, c12):
        p = RatePentagon(c1, c2, c12)
        poly = pentagon_vertices(p)
        for x, y in poly.vertices:
            assert x <= p.c1 + 1e-12 and y <= p.c2 + 1e-12 and x + y <= p.c12 + 1e-12
            if (x, y) != (0.0, 0.0):
                tight = (
                    abs(x - p.c1) <= 1e-12
                    or abs(y - p.c2) <= 1e-12
                    or abs(x + y - p.c12) <= 1e-12
                    or x <= 1e-12
                    or y <= 1e-12
                )
                assert tight


def brute_force_hull_vertices(points):
    """All-pairs half-plane oracle: (i, j) is a hull edge iff every other
    point lies weakly to its left; hull vertices are the edge endpoints."""
    verts = set()
    n = len(points)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            (ax, ay), (bx, by) = points[i], points[j]
            if all(
                (bx - ax) * (points[k][1] - ay) - (by - ay) * (points[k][0] - ax) >= 0
                for k in range(n)
                if k not in (i, j)
            ):
                verts.add(points[i])
                verts.add(points[j])
    return verts


class TestConvexHull:
    def test_random_points_against_half_plane_oracle(self):
        rng = np.random.default_rng(42)
        pts = [(float(x), float(y)) for x, y in rng.random((200, 2))]
        hull = convex_hull_2d(pts)
        everything = pts + [(0.0, 0.0)]
        # every input point is inside, and hull vertices are input points
        for p in everything:
            assert contains(hull, p, 1e-9)
        assert set(hull.vertices) <= set(everything)
        assert set(hull.vertices) == brute_force_hull_vertices(everything)

    def test_collinear_degenerates_to_segment(self):
        poly = convex_hull_2d([(0.0, 0.0), (1.0, 1.0), (2.0, 2.0), (0.5, 0.5)])
        assert poly.vertices == ((0.0, 0.0), (2.0, 2.0))

    def test_single_point(self):
        assert convex_hull_2d([(0.0, 0.0)]).vertices == ((0.0, 0.0),)

    def test_duplicates_ignored(self):
        poly = convex_hull_2d([(1.0, 0.0), (1.0, 0.0), (0.0, 1.0), (0.0, 1.0)])
        assert poly.vertices == ((0.0, 0.0), (1.0, 0.0), (0.0, 1.0))

    @settings(max_examples=100)
    @given(pos_caps, pos_caps, pos_caps)
    def test_idempotent_on_generated_polygons(self, c1, c2, c12):
        poly = pentagon_vertices(RatePentagon(c1, c2, c12))
        again = convex_hull_2d(poly.vertices)
        assert again.vertices == poly.vertices


class TestUnionRegion:
    def test_single_pentagon_identity(self):
        p = RatePentagon(1.0, 1.0, 1.5)
        assert union_region([p]).vertices == pentagon_vertices(p).vertices

    def test_two_corner_pentagons_time_share(self):
        a = RatePentagon(1.0, 0.2, 1.2)
        b = RatePentagon(0.2, 1.0, 1.2)
        merged = union_region([a, b])
        assert contains(merged, (1.0, 0.2), 1e-12)
        assert contains(merged, (0.2, 1.0), 1e-12)
        # midpoint of the time-sharing edge between the two corners
        assert contains(merged, (0.6, 0.6), 1e-12)

    def test_duplicates_do_not_change_result(self):
        p = RatePentagon(0.7, 0.9, 1.1)
        q = RatePentagon(1.0, 0.3, 1.1)
        assert union_region([p, q, p, q]).vertices == union_region([p, q]).vertices

    def test_monotone_in_the_list(self):
        ps = [RatePentagon(0.5, 0.9, 1.1), RatePentagon(1.0, 0.4, 1.2), RatePentagon(0.8, 0.8, 1.0)]
        small = union_region(ps[:2])
        big = union_region(ps)
        assert is_subset(small, big, 1e-12)

    def test_empty_list_rejected(self):
        with pytest.raises(ValueError):
            union_region([])


class TestContainmentAndDistance:
    def test_origin_always_inside(self):
        poly = pentagon_vertices(RatePentagon(1.0, 1.0, 1.5))
        assert contains(poly, (0.0, 0.0), 0.0)

    def test_vertex_inside_at_zero_tol(self):
        poly = pentagon_vertices(RatePentagon(1.0, 1.0, 1.5))
        for v in poly.vertices:
            assert contains(poly, v, 0.0)

    def test_outside_point(self):
        poly = pentagon_vertices(RatePentagon(1.0, 1.0, 1.5))
        assert not contains(poly, (1.0, 0.6), 1e-9)
        assert contains(poly, (1.0, 0.6), 0.2)

    def test_is_subset_reflexive_and_strict(self):
        inner = pentagon_vertices(RatePentagon(0.5, 0.5, 0.8))
        outer = pentagon_vertices(RatePentagon(1.0, 1.0, 1.5))
        assert is_subset(inner, inner, 0.0)
        assert is_subset(inner, outer, 1e-12)
        assert not is_subset(outer, inner, 1e-9)

    def test_hausdorff_identical_is_zero(self):
        a = pentagon_vertices(RatePentagon(1.0, 1.0, 1.5))
        assert hausdorff(a, a) == 0.0

    def test_hausdorff_shifted_square(self):
        square = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]
        shifted = [(x + 0.1, y) for x, y in square]
        assert hausdorff(square, shifted) == pytest.approx(0.1, abs=1e-12)

    def test_zero_hausdorff_implies_mutual_subsets(self):
        a = pentagon_vertices(RatePentagon(0.9, 1.1, 1.3))
        b = convex_hull_2d(a.vertices)
        assert hausdorff(a, b) == 0.0
        assert is_subset(a, b, 1e-12) and is_subset(b, a, 1e-12)


class TestBoundaryQueries:
    def test_axis_intercepts(self):
        poly = pentagon_vertices(RatePentagon(1.0, 1.0, 1.5))
        assert max_r2_at(poly, 0.0) == 1.0
        assert max_r2_at(poly, 1.0) == 0.5

    def test_edge_interpolation(self):
        poly = pentagon_vertices(RatePentagon(1.0, 1.0, 1.5))
        assert max_r2_at(poly, 0.75) == pytest.approx(0.75, abs=1e-12)

    def test_out_of_span_errors(self):
        poly = pentagon_vertices(RatePentagon(1.0, 1.0, 1.5))
        with pytest.raises(ValueError):
            max_r2_at(poly, 1.5)
        with pytest.raises(ValueError):
            max_r2_at(poly, -0.5)

    def test_degenerate_regions(self):
        point = RegionPolygon(((0.0, 0.0),))
        assert max_r2_at(point, 0.0) == 0.0
        seg = RegionPolygon(((0.0, 0.0), (0.0, 0.7)))
        assert max_r2_at(seg, 0.0) == 0.7


class TestArea:
    def test_unit_square(self):
        assert polygon_area(pentagon_vertices(RatePentagon(1.0, 1.0, 2.5))) == 1.0

    def test_triangle(self):
        assert polygon_area(pentagon_vertices(RatePentagon(1.0, 1.0, 1.0))) == 0.5

    def test_degenerate(self):
        assert polygon_area(RegionPolygon(((0.0, 0.0), (1.0, 0.0)))) == 0.0

    def test_textbook_pentagon_area(self):
        # unit square minus the clipped corner triangle of legs 0.5
        poly = pentagon_vertices(RatePentagon(1.0, 1.0, 1.5))
        assert polygon_area(poly) == pytest.approx(1.0 - 0.125, abs=1e-15)


class TestRegionPolygonInvariants:
    def test_rejects_negative_coordinates(self):
        with pytest.raises(ValueError):
            RegionPolygon(((0.0, 0.0), (-1.0, 0.5)))

    def test_rejects_missing_origin(self):
        with pytest.raises(ValueError):
            RegionPolygon(((0.1, 0.0), (1.0, 0.0), (1.0, 1.0)))

    def test_rejects_clockwise(self):
        with pytest.raises(ValueError):
            RegionPolygon(((0.0, 0.0), (0.0, 1.0), (1.0, 0.0)))
