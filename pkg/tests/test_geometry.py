"""
Test suite for convex bodies and their measurements.
"""

import math
import unittest

import numpy as np

from src.errors import GeometryError, ParameterError
from src.geometry import (
    Arc,
    ConvexBody,
    Point,
    Segment,
    area,
    circumradius,
    contact_count,
    enclosing_circle,
    in_ring,
    incircle,
    inradius,
    perimeter,
    random_convex_polygon,
    support_value,
)


def equilateral(radius: float) -> ConvexBody:
    return ConvexBody.from_vertices(
        [(radius * math.cos(2.0 * math.pi * k / 3), radius * math.sin(2.0 * math.pi * k / 3)) for k in range(3)]
    )


class TestConvexBody(unittest.TestCase):
    """Test cases for ConvexBody construction and validation."""

    def setUp(self):
        self.square = ConvexBody.from_vertices([(-1, -1), (1, -1), (1, 1), (-1, 1)])

    def test_square_measures(self):
        """Test area and perimeter of a polygon."""
        self.assertAlmostEqual(area(self.square), 4.0, places=12)
        self.assertAlmostEqual(perimeter(self.square), 8.0, places=12)
        self.assertTrue(self.square.is_polygon)
        self.assertEqual(len(self.square.vertices()), 4)

    def test_clockwise_input_is_reoriented(self):
        """Test that clockwise vertex lists give the same counterclockwise body."""
        body = ConvexBody.from_vertices([(-1, 1), (1, 1), (1, -1), (-1, -1)])
        self.assertAlmostEqual(area(body), 4.0, places=12)

    def test_collinear_vertex_dropped(self):
        """Test that a vertex in the middle of a side is removed."""
        body = ConvexBody.from_vertices([(-1, -1), (0, -1), (1, -1), (1, 1), (-1, 1)])
        self.assertEqual(len(body.segments), 4)

    def test_non_convex_rejected(self):
        """Test that a reflex corner raises GeometryError."""
        with self.assertRaises(GeometryError):
            ConvexBody.from_vertices([(0, 0), (2, 0), (1, 0.2), (2, 2), (0, 2)])

    def test_open_boundary_rejected(self):
        """Test that pieces that do not close up raise GeometryError."""
        pieces = (
            Segment(Point(0, 0), Point(1, 0)),
            Segment(Point(1, 0), Point(1, 1)),
            Segment(Point(1, 1), Point(0, 0.5)),
        )
        with self.assertRaises(GeometryError):
            ConvexBody(pieces)

    def test_disk(self):
        """Test the exact disk measures."""
        disk = ConvexBody.disk(2.0)
        self.assertAlmostEqual(area(disk), 4.0 * math.pi, places=12)
        self.assertAlmostEqual(perimeter(disk), 4.0 * math.pi, places=12)
        self.assertFalse(disk.is_polygon)

    def test_mixed_body(self):
        """Test a body bounded by a chord and an arc of the same circle."""
        eta = 0.4
        b = 3.0
        low = Point(b * math.cos(eta), -b * math.sin(eta))
        high = Point(b * math.cos(eta), b * math.sin(eta))
        body = ConvexBody((Segment(low, high), Arc(b, eta, 2.0 * math.pi - 2.0 * eta)))
        cap = b * b * (eta - math.sin(eta) * math.cos(eta))
        self.assertAlmostEqual(area(body), math.pi * b * b - cap, places=10)
        expected = 2.0 * b * math.sin(eta) + b * (2.0 * math.pi - 2.0 * eta)
        self.assertAlmostEqual(perimeter(body), expected, places=10)

    def test_double_diameter(self):
        """Test the degenerate segment traversed twice."""
        body = ConvexBody.double_diameter(3.0)
        self.assertTrue(body.degenerate)
        self.assertAlmostEqual(area(body), 0.0, places=12)
        self.assertAlmostEqual(perimeter(body), 12.0, places=12)
        with self.assertRaises(GeometryError):
            incircle(body)

    def test_scale_and_translate(self):
        """Test that scaling multiplies area by the squared factor and translation keeps it."""
        scaled = self.square.scale(1.5)
        self.assertAlmostEqual(area(scaled), 9.0, places=12)
        moved = self.square.translate(3.0, -2.0)
        self.assertAlmostEqual(area(moved), 4.0, places=12)
        with self.assertRaises(GeometryError):
            ConvexBody.disk(1.0).translate(1.0, 0.0)

    def test_dict_round_trip(self):
        """Test serialization of a body with arcs."""
        body = ConvexBody.disk(1.25)
        self.assertEqual(ConvexBody.from_dict(body.to_dict()), body)


class TestMeasures(unittest.TestCase):
    """Test cases for support function, ring membership and radii."""

    def setUp(self):
        self.triangle = equilateral(3.0)

    def test_equilateral_triangle(self):
        """Test area and perimeter of the triangle inscribed in D_3."""
        self.assertAlmostEqual(area(self.triangle), 11.691342951, places=8)
        self.assertAlmostEqual(perimeter(self.triangle), 15.588457268, places=8)

    def test_support_value(self):
        """Test support values of a disk and a polygon."""
        self.assertAlmostEqual(support_value(ConvexBody.disk(2.0), 1.1), 2.0, places=12)
        self.assertAlmostEqual(support_value(self.triangle, 0.0), 3.0, places=12)
        self.assertAlmostEqual(support_value(self.triangle, math.pi), 1.5, places=12)

    def test_in_ring(self):
        """Test containment between D_a and D_b."""
        self.assertTrue(in_ring(self.triangle, 1.5, 3.0))
        self.assertFalse(in_ring(self.triangle, 1.6, 3.0))
        self.assertFalse(in_ring(self.triangle, 1.0, 2.9))
        with self.assertRaises(ParameterError):
            in_ring(self.triangle, 3.0, 2.0)

    def test_incircle(self):
        """Test the linear-program inradius and the number of touching sides."""
        center, r = incircle(self.triangle)
        self.assertAlmostEqual(r, 1.5, places=7)
        self.assertAlmostEqual(center.x, 0.0, places=6)
        self.assertAlmostEqual(center.y, 0.0, places=6)
        self.assertEqual(contact_count(self.triangle, center, r, rel_tol=1e-6), 3)

    def test_inradius_of_disk(self):
        """Test that sampled arc tangents reproduce the radius of a disk."""
        self.assertAlmostEqual(inradius(ConvexBody.disk(2.0)), 2.0, places=5)

    def test_enclosing_circle(self):
        """Test the smallest enclosing circle of point sets."""
        cx, cy, r = enclosing_circle(np.array([[0.0, 0.0], [4.0, 0.0], [2.0, 0.5]]))
        self.assertAlmostEqual(cx, 2.0, places=12)
        self.assertAlmostEqual(cy, 0.0, places=12)
        self.assertAlmostEqual(r, 2.0, places=12)
        self.assertAlmostEqual(circumradius(self.triangle), 3.0, places=9)
        with self.assertRaises(GeometryError):
            enclosing_circle(np.zeros((0, 2)))

    def test_enclosing_circle_independent_of_seed(self):
        """Test that the shuffle seed does not change the circle."""
        points = np.random.default_rng(4).normal(size=(50, 2))
        first = enclosing_circle(points, seed=0)
        second = enclosing_circle(points, seed=9)
        for u, v in zip(first, second):
            self.assertAlmostEqual(u, v, places=10)
        distances = np.hypot(points[:, 0] - first[0], points[:, 1] - first[1])
        self.assertTrue(np.all(distances <= first[2] * (1.0 + 1e-12)))


class TestRandomBodies(unittest.TestCase):
    """Test cases for seeded random polygons."""

    def test_deterministic(self):
        """Test that equal seeds give equal polygons."""
        first = random_convex_polygon(20, 2.0, seed=11)
        second = random_convex_polygon(20, 2.0, seed=11)
        self.assertEqual(first.to_dict(), second.to_dict())

    def test_inside_sampling_disk(self):
        """Test that every vertex lies in the sampling disk."""
        body = random_convex_polygon(40, 1.5, seed=3)
        for point in body.vertices():
            self.assertLessEqual(math.hypot(point.x, point.y), 1.5 + 1e-12)
        self.assertGreater(area(body), 0.0)

    def test_invalid_arguments(self):
        """Test argument validation."""
        with self.assertRaises(ParameterError):
            random_convex_polygon(2, 1.0, seed=0)
        with self.assertRaises(ParameterError):
            random_convex_polygon(5, 0.0, seed=0)


if __name__ == "__main__":
    unittest.main()
