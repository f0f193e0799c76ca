"""
Test suite for angle configurations, the closed-form functional,
certificates and perturbation formulas.
"""

import math
import unittest

import numpy as np

from src.angles import (
    AngleConfig,
    RingParams,
    area_of,
    certify_config,
    chord_cut_disk,
    chord_slope,
    chord_term,
    delta_arc_chord,
    delta_arc_tangent,
    delta_min_side,
    delta_slide_vertex,
    delta_trapezoid,
    evaluate_J,
    hessian_spectrum,
    kkt_residuals,
    perimeter_of,
    regular_config,
    second_order_ok,
    synthesize_polygon,
    tangent_corner_disk,
    tangent_slope,
    tangent_term,
    xi0,
)
from src.errors import ConfigError, ParameterError
from src.geometry import ConvexBody, area, in_ring, perimeter


def body_J(body: ConvexBody, lam: float) -> float:
    return lam * area(body) - perimeter(body)


class TestRingParams(unittest.TestCase):
    """Test cases for ring validation and xi0."""

    def test_xi0(self):
        """Test the half-angle of a chord of D_b tangent to D_a."""
        ring = RingParams(1.0, 3.0)
        self.assertAlmostEqual(xi0(ring), 1.230959417341, places=11)
        self.assertAlmostEqual(ring.half_chord, math.sqrt(8.0), places=14)

    def test_invalid_radii(self):
        """Test that a >= b, a <= 0 and non-finite radii are rejected."""
        for a, b in ((2.0, 1.0), (1.0, 1.0), (0.0, 1.0), (-1.0, 2.0), (1.0, math.inf)):
            with self.assertRaises(ParameterError):
                RingParams(a, b)


class TestAngleConfig(unittest.TestCase):
    """Test cases for AngleConfig invariants."""

    def setUp(self):
        self.ring = RingParams(1.0, 3.0)
        self.xi = self.ring.xi0

    def test_regular_config(self):
        """Test that regular_config spreads pi evenly over chords."""
        config = regular_config(self.ring, 3)
        self.assertEqual(config.p, 0)
        self.assertEqual(len(config.chord_angles), 3)
        self.assertAlmostEqual(config.angle_sum(self.ring), math.pi, places=14)

    def test_regular_config_reports_xi0_sides(self):
        """Test that chords of half-angle xi0 become xi0 sides."""
        ring = RingParams(1.0, 2.0)
        config = regular_config(ring, 3)
        self.assertEqual(config.p, 3)
        self.assertEqual(config.chord_angles, ())

    def test_angle_out_of_range(self):
        """Test that free angles at or beyond xi0 are rejected."""
        with self.assertRaises(ConfigError):
            AngleConfig(0, (), (self.xi, math.pi - self.xi)).validated(self.ring)

    def test_bad_sum(self):
        """Test that a sum off by more than the renormalization limit is rejected."""
        with self.assertRaises(ConfigError):
            AngleConfig(0, (), (1.0, 1.0, 1.0)).validated(self.ring)

    def test_small_residual_renormalized(self):
        """Test that a sum off by 1e-10 is absorbed by the largest free angle."""
        third = math.pi / 3.0
        config = AngleConfig(0, (), (third + 1e-10, third, third)).validated(self.ring)
        self.assertAlmostEqual(config.angle_sum(self.ring), math.pi, places=14)

    def test_tangent_and_chords_need_xi0_side(self):
        """Test that tangent pairs and chords cannot coexist without a xi0 side."""
        with self.assertRaises(ConfigError):
            AngleConfig(0, (1.0,), (1.0, math.pi - 2.0)).validated(self.ring)

    def test_negative_p(self):
        """Test that p must be a non-negative integer."""
        with self.assertRaises(ConfigError):
            AngleConfig(-1)
        with self.assertRaises(ConfigError):
            AngleConfig(1.5)

    def test_canonical_order(self):
        """Test that canonical() sorts each class in descending order."""
        config = AngleConfig(0, (), (0.5, 1.0, math.pi - 1.5)).canonical()
        self.assertEqual(list(config.chord_angles), sorted(config.chord_angles, reverse=True))

    def test_from_dict_malformed(self):
        """Test that documents without p are rejected."""
        with self.assertRaises(ConfigError):
            AngleConfig.from_dict({"chords": [1.0]})


class TestEnergy(unittest.TestCase):
    """Test cases for the closed-form area, perimeter and J."""

    def setUp(self):
        self.ring = RingParams(1.0, 3.0)
        self.xi = self.ring.xi0
        self.x = math.pi - 2.0 * self.xi
        self.mixed = AngleConfig(1, (0.5,), (0.8, math.pi - self.xi - 1.3))

    def test_equilateral_triangle(self):
        """Test J of the equilateral triangle inscribed in D_3."""
        config = regular_config(self.ring, 3)
        self.assertAlmostEqual(area_of(config, self.ring), 11.691342951, places=8)
        self.assertAlmostEqual(perimeter_of(config, self.ring), 15.588457268, places=8)
        self.assertAlmostEqual(evaluate_J(config, self.ring, 0.25), -12.665621530, places=8)

    def test_isosceles_triangles(self):
        """Test the two minimum-side triangles of the (1, 3) ring."""
        tangent = AngleConfig(2, (self.x,), ())
        chord = AngleConfig(2, (), (self.x,))
        self.assertAlmostEqual(area_of(tangent, self.ring), 6.4650, places=4)
        self.assertAlmostEqual(area_of(chord, self.ring), 10.0566, places=4)

    def test_matches_synthesized_polygon(self):
        """Test that closed forms agree with the measured synthesized polygon."""
        for config in (self.mixed, AngleConfig(2, (self.x,), ()), regular_config(self.ring, 5)):
            body = synthesize_polygon(config, self.ring)
            self.assertTrue(in_ring(body, self.ring.a, self.ring.b))
            self.assertAlmostEqual(area(body), area_of(config, self.ring), places=9)
            self.assertAlmostEqual(perimeter(body), perimeter_of(config, self.ring), places=9)
            self.assertEqual(len(body.segments), config.side_count)

    def test_slopes_match_finite_differences(self):
        """Test the per-angle derivatives against central differences of the terms."""
        h = 1e-6
        lam = 0.4
        for theta in (0.2, 0.7, 1.1):
            fd = (tangent_term(self.ring, lam, theta + h) - tangent_term(self.ring, lam, theta - h)) / (2.0 * h)
            self.assertAlmostEqual(float(tangent_slope(self.ring, lam, theta)), fd, places=6)
        for eta in (0.1, 0.6, 1.2):
            fd = (chord_term(self.ring, lam, eta + h) - chord_term(self.ring, lam, eta - h)) / (2.0 * h)
            self.assertAlmostEqual(float(chord_slope(self.ring, lam, eta)), fd, places=6)

    def test_array_inputs(self):
        """Test that slopes and terms accept numpy arrays."""
        angles = np.array([0.2, 0.4, 0.6])
        self.assertEqual(chord_slope(self.ring, 0.3, angles).shape, (3,))
        self.assertEqual(tangent_term(self.ring, 0.3, angles).shape, (3,))

    def test_hessian_matches_finite_differences(self):
        """Test the diagonal Hessian against differences of the slopes."""
        h = 1e-6
        lam = 0.3
        spectrum = hessian_spectrum(self.mixed, self.ring, lam)
        theta = self.mixed.tangent_angles[0]
        fd_t = (tangent_slope(self.ring, lam, theta + h) - tangent_slope(self.ring, lam, theta - h)) / (2.0 * h)
        self.assertAlmostEqual(spectrum[1], float(fd_t), places=5)
        for k, eta in enumerate(self.mixed.chord_angles):
            fd_c = (chord_slope(self.ring, lam, eta + h) - chord_slope(self.ring, lam, eta - h)) / (2.0 * h)
            self.assertAlmostEqual(spectrum[2 + k], float(fd_c), places=5)
        fd_xi = (tangent_slope(self.ring, lam, self.xi + h) - tangent_slope(self.ring, lam, self.xi - h)) / (2.0 * h)
        self.assertAlmostEqual(spectrum[0] / float(fd_xi), 1.0, places=6)


class TestCertificates(unittest.TestCase):
    """Test cases for KKT residuals and the second-order test."""

    def setUp(self):
        self.ring = RingParams(1.0, 3.0)

    def test_regular_polygon_is_stationary(self):
        """Test that equal chords have zero stationarity residual."""
        cert = certify_config(regular_config(self.ring, 4), self.ring, 0.2)
        self.assertLess(cert.kkt_residual, 1e-12)
        self.assertEqual(len(cert.hessian_eigenvalues), 4)

    def test_two_tangent_pairs_not_stationary(self):
        """Test that unequal tangent pairs next to a chord violate stationarity."""
        config = AngleConfig(1, (0.3, 0.5), (math.pi - self.ring.xi0 - 0.8,))
        self.assertGreater(kkt_residuals(config, self.ring, 1.0).kkt_residual, 0.1)
        self.assertFalse(second_order_ok(config, self.ring, 1.0).ok)

    def test_quasi_shape_with_wrong_orientation_fails(self):
        """Test that three large equal chords and one small chord fail where the sum of inverses is positive."""
        config = AngleConfig(0, (), (0.9, 0.9, 0.9, math.pi - 2.7))
        verdict = second_order_ok(config, self.ring, 0.2188)
        self.assertEqual(verdict.negative_count, 1)
        self.assertFalse(verdict.ok)
        self.assertGreater(verdict.hpr_sum, 1.0)

    def test_quasi_regular_quadrilateral_passes(self):
        """Test the second-order test on the quasi-regular quadrilateral."""
        x = 1.0135
        config = AngleConfig(0, (), (x, x, x, math.pi - 3.0 * x))
        verdict = second_order_ok(config, self.ring, 0.22)
        self.assertTrue(verdict.ok)
        self.assertLess(verdict.hpr_sum, 0.0)

    def test_xi0_multipliers_sign(self):
        """Test that a xi0 side next to a chord has a non-negative multiplier below 2/a."""
        x = math.pi - 2.0 * self.ring.xi0
        cert = kkt_residuals(AngleConfig(2, (), (x,)), self.ring, 0.5)
        self.assertEqual(len(cert.xi0_multipliers), 2)
        self.assertTrue(all(m >= 0.0 for m in cert.xi0_multipliers))


class TestPerturbations(unittest.TestCase):
    """Test cases for the closed-form J differences."""

    def setUp(self):
        self.ring = RingParams(1.0, 3.0)
        self.x = math.pi - 2.0 * self.ring.xi0

    def test_arc_chord_sign(self):
        """Test that cutting a thin cap pays off only for lambda below 2/(3b) in the limit."""
        b = 3.0
        self.assertGreater(delta_arc_chord(b, 0.6 / b, 0.1), 0.0)
        self.assertLess(delta_arc_chord(b, 0.5 / b, 0.1), 0.0)
        self.assertEqual(delta_arc_chord(b, 0.3, 0.0), 0.0)

    def test_arc_chord_geometry(self):
        """Test the formula against the measured cut disk."""
        b, lam, eta = 3.0, 0.27, 0.7
        expected = body_J(ConvexBody.disk(b), lam) - body_J(chord_cut_disk(b, eta), lam)
        self.assertAlmostEqual(delta_arc_chord(b, lam, eta), expected, places=10)

    def test_arc_tangent_geometry(self):
        """Test the formula against the measured tangent corner."""
        a, lam, eta = 1.0, 1.2, 0.6
        expected = body_J(ConvexBody.disk(a), lam) - body_J(tangent_corner_disk(a, eta), lam)
        self.assertAlmostEqual(delta_arc_tangent(a, lam, eta), expected, places=10)
        self.assertGreater(delta_arc_tangent(a, 1.2, 0.6), 0.0)
        self.assertLess(delta_arc_tangent(a, 2.5, 0.6), 0.0)

    def test_slide_vertex_matches_configs(self):
        """Test the vertex slide against the closed-form J of both triangles."""
        for lam in (0.4, 0.6, 1.5):
            chord = evaluate_J(AngleConfig(2, (), (self.x,)), self.ring, lam)
            tangent = evaluate_J(AngleConfig(2, (self.x,), ()), self.ring, lam)
            self.assertAlmostEqual(delta_slide_vertex(self.ring, lam, self.x), chord - tangent, places=10)
        self.assertAlmostEqual(delta_slide_vertex(self.ring, 0.6, self.x), 0.0, places=12)

    def test_min_side_is_opposite_of_slide(self):
        """Test that the minimum-side difference is the slide difference with the sign flipped."""
        for lam in (0.45, 0.9):
            self.assertAlmostEqual(
                delta_min_side(self.ring, lam, self.x), -delta_slide_vertex(self.ring, lam, self.x), places=12
            )

    def test_trapezoid_geometry(self):
        """Test the trapezoid gain against measured polygons."""
        a = self.ring.a
        s = self.ring.half_chord
        eta, eps, lam = 0.7, 0.3, 0.3
        base = ConvexBody.from_vertices([(-s, -a), (s, -a), (s, 1.0), (-s, 1.0)])
        dx, dy = eps * math.cos(eta), eps * math.sin(eta)
        pushed = ConvexBody.from_vertices([
            (-(s - dx), -a - dy), (s - dx, -a - dy), (s, -a), (s, 1.0), (-s, 1.0), (-s, -a),
        ])
        expected = body_J(pushed, lam) - body_J(base, lam)
        self.assertAlmostEqual(delta_trapezoid(self.ring, lam, eta, eps), expected, places=10)

    def test_invalid_arguments(self):
        """Test range checks of the perturbation formulas."""
        with self.assertRaises(ParameterError):
            delta_arc_chord(3.0, 0.2, 2.0)
        with self.assertRaises(ParameterError):
            delta_slide_vertex(self.ring, 0.5, self.ring.xi0)
        with self.assertRaises(ParameterError):
            delta_trapezoid(self.ring, 0.5, 0.7, 10.0)


if __name__ == "__main__":
    unittest.main()
