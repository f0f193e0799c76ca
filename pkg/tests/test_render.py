"""
Test suite for SVG drawings and console summaries.
"""

import math
import unittest

from src.angles import RingParams
from src.geometry import ConvexBody
from src.solver import family_members, solve
from src.visualization import format_solution, render_body_svg, render_family_svg, render_solution_svg, side_class


class TestRenderSVG(unittest.TestCase):
    """Test cases for drawings of bodies in the ring."""

    def setUp(self):
        self.ring = RingParams(1.0, 3.0)
        self.triangle = ConvexBody.from_vertices(
            [(3.0 * math.cos(2.0 * math.pi * k / 3), 3.0 * math.sin(2.0 * math.pi * k / 3)) for k in range(3)]
        )

    def test_solution_drawing(self):
        """Test that a solution is drawn with both circles and its outline."""
        svg = render_solution_svg(solve(self.ring, 0.25))
        self.assertTrue(svg.lstrip().startswith("<?xml") or svg.lstrip().startswith("<svg"))
        self.assertEqual(svg.count("<circle"), 2)
        self.assertIn("<path", svg)
        self.assertIn("λ = 0.25", svg)

    def test_deterministic(self):
        """Test that identical input gives identical text."""
        solution = solve(self.ring, 0.5)
        self.assertEqual(render_solution_svg(solution), render_solution_svg(solution))

    def test_side_labels(self):
        """Test side labels: xi0 for tangent chords, eta for plain chords."""
        self.assertEqual(render_body_svg(self.triangle, 1.5, 3.0).count("ξ0"), 3)
        self.assertEqual(render_body_svg(self.triangle, 1.0, 3.0).count("η"), 3)
        self.assertNotIn("η", render_body_svg(self.triangle, 1.0, 3.0, labels=False))

    def test_side_class(self):
        """Test the class read off a single side."""
        segments = self.triangle.segments
        self.assertEqual(side_class(segments[0], 1.5, 3.0), "ξ0")
        self.assertEqual(side_class(segments[0], 1.5, 4.0), "θ")
        self.assertEqual(side_class(segments[0], 1.0, 3.0), "η")
        self.assertIsNone(side_class(segments[0], 1.0, 4.0))

    def test_disk_without_inner_circle(self):
        """Test a disk drawn with the outer circle only."""
        svg = render_body_svg(ConvexBody.disk(2.0), None, 2.0)
        self.assertEqual(svg.count("<circle"), 1)
        self.assertIn("<path", svg)

    def test_family_drawings(self):
        """Test one drawing per sampled family member."""
        drawings = render_family_svg(family_members(self.ring, 2, seed=0), 1.0, 3.0)
        self.assertEqual(len(drawings), 2)
        for k, svg in enumerate(drawings):
            self.assertIn(f"J = 0 family member {k + 1}", svg)


class TestFormatSolution(unittest.TestCase):
    """Test cases for the console summary."""

    def test_polygon_summary(self):
        """Test the summary of a regular square."""
        text = format_solution(solve(RingParams(1.0, 3.0), 0.2))
        self.assertIn("Regime:    InscribedRegular", text)
        self.assertIn("Classes:   p = 0", text)
        self.assertIn("η: ", text)

    def test_disk_summary(self):
        """Test that disks have no angle classes."""
        text = format_solution(solve(RingParams(1.0, 3.0), 0.1))
        self.assertIn("OuterDisk", text)
        self.assertNotIn("Classes", text)


if __name__ == "__main__":
    unittest.main()
